#ifndef SYMGB_IDEALS_HPP
#define SYMGB_IDEALS_HPP

#include <iosfwd>
#include <optional>
#include <variant>

#include "symgb/modular.hpp"
#include "symgb/polynomial_io.hpp"

namespace symgb {

template <class Ring>
struct BasicIdealSpec {
    RingContext<Ring> ctx;
    std::vector<Polynomial<Ring>> generators;
    std::optional<Permutation> symmetry;
};

using IdealSpecQ = BasicIdealSpec<Rationals>;
using IdealSpecP = BasicIdealSpec<PrimeField>;
using IdealSpec = std::variant<IdealSpecQ, IdealSpecP>;

/// cyclic(n): for d = 1..n-1 the cyclic window sums of length d, plus
/// x_1...x_n - 1; symmetric under the n-cycle (1 2 ... n), which is the
/// attached default symmetry.
IdealSpecQ cyclic_ideal(int n);

/// The 9-variable maximum-likelihood ideal behind the 100 Swiss Francs
/// problem, localized by 1 - u*a1. Variables a1..a4, b1..b4, u with
/// symmetry (3 4)(7 8); with u_first the labeling u, a1..a4, b1..b4 and
/// symmetry (4 5)(8 9).
IdealSpecQ swiss_francs_ideal(bool u_first = false);

/// Plain-text ideal files:
///   ring: Q            (or: ring: F 127)
///   vars: x y z
///   order: dp          (dp | lp | block:dp8,lp1)
///   perm: (1 2)(3)     (optional)
///   <one generator per line>
/// Blank lines and '#' comments are ignored; printing is canonical and
/// round-trips exactly.
IdealSpec parse_ideal_text(std::string_view text);
IdealSpec parse_ideal_stream(std::istream& in);
IdealSpec parse_ideal_file(const std::string& path);
std::string print_ideal(const IdealSpec& spec);

/// Reduce a rational ideal spec into F_p (coefficients num * den^-1 mod p).
IdealSpecP reduce_ideal(const IdealSpecQ& spec, uint32_t p);

}  // namespace symgb

#endif
