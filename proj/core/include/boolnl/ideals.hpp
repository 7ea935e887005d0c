#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "boolnl/bitfn.hpp"
#include "boolnl/nlpoly.hpp"
#include "boolnl/nonlinearity.hpp"

namespace boolnl {

// Ideals whose varieties over the Boolean cube {0,1}^(n+1) in the unknowns
// a0..an (the coefficients of a generic affine function) encode distances
// from f to affine functions:
//
//   J_t(f) over F2: every product of t distinct entries of the vector
//                   (a0 + a.u + f(u))_u, plus the field equations;
//                   nonempty iff some affine function lies within t - 1.
//   N_t(f) over Q:  the nonlinearity polynomial minus t, plus the field
//                   equations; nonempty iff some affine function lies at
//                   distance exactly t.
//
// The field equations a_i^2 - a_i restrict every variety to the cube, so
// emptiness is decided here by evaluating at all 2^(n+1) Boolean points.

enum class IdealKind { kJ, kN };

// Affine polynomial over F2 in a0..an: bit i of `vars` is the coefficient of
// a_i (bit 0 is a0).
struct LinearForm {
  bool constant = false;
  std::uint32_t vars = 0;

  bool evaluate(std::uint32_t point) const noexcept {
    return constant ^ (std::popcount(vars & point) & 1);
  }
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

std::string format_linear_form(const LinearForm& p);

// Assignment of a0..an (bit i = a_i) corresponding to an affine function.
std::uint32_t cube_point(const AffineFunction& alpha, int n);

// f(u) + a0 + sum_i u_i a_i for every u in table order.
std::vector<LinearForm> affine_factors(const BooleanFunction& f);

// One generator of J_t: the product of the factors at table indices
// `points` (strictly increasing).
struct JGenerator {
  std::vector<Point> points;
  std::vector<LinearForm> factors;

  bool evaluate(std::uint32_t cube) const noexcept;
  std::string to_string() const;
};

// Lexicographic enumeration of the t-subsets of the 2^n factors.
class JGeneratorStream {
 public:
  JGeneratorStream(const BooleanFunction& f, int t);
  JGeneratorStream(std::vector<LinearForm> factors, int t);

  std::optional<JGenerator> next();

 private:
  std::vector<LinearForm> factors_;
  std::vector<Point> combo_;
  bool done_ = false;
};

struct JGeneratorBatch {
  std::vector<JGenerator> generators;
  bool truncated = false;  // more generators exist beyond `limit`
};

// Throws OutOfRange unless 1 <= t <= 2^n.
JGeneratorBatch enumerate_J_generators(const BooleanFunction& f, int t, std::uint64_t limit);

struct IdealSpec {
  IdealKind kind = IdealKind::kN;
  int n = 0;
  std::int64_t t = 0;
  std::optional<NlPolynomial> polynomial;  // kind N
  std::vector<LinearForm> factors;         // kind J

  // Total number of generators, field equations included, in decimal. The
  // J count C(2^n, t) + n + 1 quickly outgrows any machine integer.
  std::string generator_count() const;
  std::optional<std::uint64_t> generator_count_u64() const;
};

// Throws OutOfRange unless 0 <= t <= 2^n.
IdealSpec build_N_ideal(const BooleanFunction& f, std::int64_t t);
// Throws OutOfRange unless 1 <= t <= 2^n.
IdealSpec build_J_ideal(const BooleanFunction& f, std::int64_t t);

bool variety_nonempty_N(const BooleanFunction& f, std::int64_t t);
bool variety_nonempty_N(const DistanceVector& d, std::int64_t t);
std::vector<AffineFunction> variety_points_N(const DistanceVector& d, std::int64_t t);

// Smallest t >= 0 whose N-variety is nonempty.
std::int64_t nonlinearity_via_N(const BooleanFunction& f);

enum class VarietyMode {
  kDistance,  // minimum of the distance vector
  kDirect,    // evaluate every streamed generator at every cube point
};

inline constexpr int kDirectJMaxVars = 4;

// Direct mode throws TooLarge for n > kDirectJMaxVars.
bool variety_nonempty_J(const BooleanFunction& f, std::int64_t t,
                        VarietyMode mode = VarietyMode::kDistance);
bool variety_nonempty_J(const DistanceVector& d, std::int64_t t);
std::vector<AffineFunction> variety_points_J(const DistanceVector& d, std::int64_t t);
// Cube points where every generator of J_t vanishes, by direct evaluation.
std::vector<AffineFunction> variety_points_J_direct(const BooleanFunction& f, std::int64_t t);

// Returns j - 1 for the smallest j >= 1 whose J-variety is nonempty.
std::int64_t nonlinearity_via_J(const BooleanFunction& f);

// Reports whose nearest sets are the varieties at the minimizing threshold.
NlReport nonlinearity_report_via_N(const BooleanFunction& f);
NlReport nonlinearity_report_via_J(const BooleanFunction& f);

// Point-level membership in the vanishing ideal of vectors of weight < t:
// true iff every square-free degree-t monomial in the coordinates vanishes
// at `point`.
bool all_t_monomials_vanish(std::span<const std::uint8_t> point, int t);

// Plain-text generator list for external algebra systems. The header line
//   # ideal kind=<J|N> n=<n> t=<t> field=<GF2|QQ> generators=<total>
//     emitted=<k> truncated=<0|1>
// (on one line) is followed by at most `limit` generators, one per line:
// the non-field generators first, then a_i^2 - a_i for i = 0..n.
std::string export_ideal(const IdealSpec& spec, std::uint64_t limit);

}  // namespace boolnl
