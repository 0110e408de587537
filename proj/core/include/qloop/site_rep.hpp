#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qloop/identity_check.hpp"
#include "qloop/laurent_poly.hpp"

namespace qloop {

enum class Backend { spin_half, highest_weight, cyclic };

const char* to_string(Backend b);
std::optional<Backend> backend_from_string(const std::string& s);

enum class GateMode { generic, root_of_unity };

using SiteMatrix = std::vector<std::vector<LaurentPoly>>;

/// One site's e', f', k', Z with entries in Z[q, q^-1].
///
/// clock[n] is the integer label w of local state n, with Z = diag(q^{2w}).
/// A_L^{1/2} on the chain is q^{sum w}.
struct SiteRep {
  Backend kind = Backend::spin_half;
  int n_param = 2;
  int dim = 2;
  SiteMatrix e, f, k, k_inv, z, z_inv;
  std::vector<int> clock;
  LaurentPoly c;            // cyclic family parameter
  bool generic_valid = true;  // Chevalley relations hold before specialisation
  bool wraps = false;         // e' or f' wraps the clock index
};

/// Throws UnsupportedKind or InvalidParams.
SiteRep build_site_rep(Backend kind, int n_param, const LaurentPoly& c = {});

/// Site-level relations: k'e'k'^-1 = q^2 e', k'f'k'^-1 = q^-2 f',
/// (q - q^-1)[e', f'] = k' - k'^-1, the Z exchange relations and, at the root
/// of unity, Z^N = 1 and k' = +-q^-1 Z^-1 (the sign goes in the note).
/// Failures are reported, not thrown.
std::vector<IdentityCheck> rep_self_check(const SiteRep& rep, GateMode mode);

}  // namespace qloop
