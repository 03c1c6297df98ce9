#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ulrich/core.hpp"

// Schur bundles on partial flag varieties: the λ ↔ P = λ + ρ dictionary,
// Borel-Weil-Bott, Schur functor dimensions, ranks, degrees.
namespace ulrich::geometry {

using BigInt = boost::multiprecision::cpp_int;

/// Concatenated weight λ, weakly decreasing inside each block.
struct SchurWeight {
  FlagType type;
  std::vector<Entry> lambda;

  /// Validates the lengths and the within-block ordering.
  SchurWeight(FlagType type, std::vector<Entry> lambda);
  std::span<const Entry> block(int i) const;
  std::string to_string() const;
  friend bool operator==(const SchurWeight&, const SchurWeight&) = default;
};

/// Parses "6|5,2,2,1|1".
SchurWeight parse_weight(std::string_view text);

/// (n-1, n-2, ..., 0).
std::vector<Entry> rho(int n);

enum class WeightShift {
  AsIs,     // λ = P - ρ with no translation
  MinZero,  // translate so that the smallest entry of λ is 0
};

SchurWeight to_weight(const BlockedPartition& p, WeightShift shift = WeightShift::AsIs);
/// Throws InvalidPartition if λ + ρ is not strictly decreasing.
BlockedPartition to_partition(const SchurWeight& w);

/// Dimension of S^μ of a d-dimensional space via hook lengths; μ may contain negatives.
/// Throws std::invalid_argument unless μ is weakly decreasing with length d.
BigInt schur_dim(std::span<const Entry> mu, int d);
/// The same number through Π_{i<j} (μ_i - μ_j + j - i) / (j - i).
BigInt schur_dim_weyl(std::span<const Entry> mu, int d);

/// Π_s dim S^{λ_s} of the s-th tautological quotient.
BigInt bundle_rank(const SchurWeight& w);

struct CohomologyAnswer {
  bool vanishes = true;
  int degree = 0;          // q
  std::vector<Entry> mu;   // dominant weight
  BigInt dimension = 0;

  static CohomologyAnswer vanishing() { return {}; }
};

/// Cohomology of E_λ(-t).
CohomologyAnswer bwb_cohomology(const SchurWeight& w, std::int64_t t);

/// Σ (-1)^i h^i(E_λ(-t)).
BigInt euler_characteristic(const SchurWeight& w, std::int64_t t);

bool is_ulrich_via_bwb(const SchurWeight& w);

/// Σ k_i (k_{i+1} - k_i); throws std::logic_error if it disagrees with Σ_{i<j} l_i l_j.
std::int64_t flag_dimension(const FlagType& type);

/// a_1, ..., a_r with all a_i >= 1.
struct PolarizationWeights {
  std::vector<std::int64_t> a;

  /// Σ_{k=i}^{j} a_k, 1-based.
  std::int64_t b(int i, int j) const;
  static PolarizationWeights ones(int r) { return {std::vector<std::int64_t>(static_cast<std::size_t>(r), 1)}; }
};

/// Degree of F(k_1, ..., k_r; n) in the embedding given by the weights.
BigInt flag_degree(const FlagType& type, const PolarizationWeights& weights);

struct UlrichIdentity {
  BigInt h0;
  BigInt rank;
  BigInt degree;
  bool ok = false;
};

/// h^0 = rank * degree with the minimal polarization. Throws std::invalid_argument if
/// λ + ρ is not strictly decreasing.
UlrichIdentity ulrich_identity_check(const SchurWeight& w);

std::string to_string(const BigInt& x);

}  // namespace ulrich::geometry
