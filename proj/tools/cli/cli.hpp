#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hv/automorphisms.hpp"
#include "hv/cocycles.hpp"
#include "hv/derivations.hpp"

namespace hv::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs `hv <subcommand> ...` (args exclude the program name). The JSON
/// report goes to `out`, usage errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// `phi`, `psi`, `sigma0`, `sigma-1`, `sigma-2`, `xi([s1,...])`,
/// `eta1([s1,...])`, `adL([a1,...])`, `adI([a1,...])`, `lifted(<desc>)`,
/// `phibar`, `sigma0bar`, `xibar([s1,...],l,k)`, `psibar(l,k)`.
DerivationDescriptor parse_derivation(std::string_view text);

/// JSON object with optional fields xi, matrix, chi, f, l, l0, l1, l2, l3;
/// missing fields take their identity values. Scalars are strings in the
/// scalar grammar (plain integers are accepted too).
AutParams parse_aut_params(std::size_t rank, std::string_view json_text);
std::string aut_params_json(const AutParams& p);

}  // namespace hv::cli
