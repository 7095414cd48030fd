/// @file macaulay.hpp
/// @brief Bigraded monomial bases, Macaulay-style multiplication matrices for
///        the Jacobian ideal of F = sum w_j f_j, and prime-field rank.
///
/// Grading: deg x_i = (0, a_i), deg w_j = (1, -d_j).  The generators of J are
/// the f_j (bidegree (0, d_j)) and G_i = dF/dx_i (bidegree (1, -a_i)).

#pragma once

#include <cstring>
#include <string>
#include <unordered_map>
#include <vector>

#include "wci/family.hpp"
#include "wci/modular.hpp"

namespace wci {

using Exponents = std::vector<int>;

/// All exponent vectors with the given weighted degree, exponent-lexicographic
/// descending in the leading variable.  Fixed ordering keeps matrices
/// bit-for-bit reproducible for a given seed.
inline void enumerate_monomials(const std::vector<int>& weights, long long degree,
                                std::vector<Exponents>& out) {
  Exponents current(weights.size(), 0);
  // iterative DFS over positions
  struct Frame {
    size_t var;
    long long remaining;
    int exponent;
  };
  std::vector<Frame> stack;
  stack.push_back({0, degree, static_cast<int>(degree / weights[0])});
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.var + 1 == weights.size()) {
      if (f.remaining % weights[f.var] == 0) {
        current[f.var] = static_cast<int>(f.remaining / weights[f.var]);
        out.push_back(current);
      }
      stack.pop_back();
      continue;
    }
    if (f.exponent < 0) {
      stack.pop_back();
      continue;
    }
    current[f.var] = f.exponent;
    const long long rest = f.remaining - static_cast<long long>(f.exponent) * weights[f.var];
    --f.exponent;
    stack.push_back({f.var + 1, rest, static_cast<int>(rest / weights[f.var + 1])});
  }
}

namespace detail {

struct ExponentsHash {
  size_t operator()(const Exponents& e) const {
    uint64_t h = 0xcbf29ce484222325ull;
    for (int v : e) {
      h ^= static_cast<uint64_t>(v) + 0x9e37u;
      h *= 0x100000001b3ull;
    }
    return static_cast<size_t>(h);
  }
};

}  // namespace detail

/// Monomial basis of the bigraded piece S_{q,e}: pairs (w-exponents, x-exponents)
/// with sum(beta) = q and weighted x-degree e + sum(beta_j d_j).  w-exponent
/// blocks are ordered lexicographically descending; x-monomials as above.
struct BigradedBasis {
  std::vector<Exponents> w_blocks;                    // each sums to q
  std::vector<std::vector<Exponents>> x_monomials;    // per block
  std::vector<size_t> block_offset;                   // column offset per block
  size_t size = 0;
  std::vector<std::unordered_map<Exponents, size_t, detail::ExponentsHash>> x_index;

  long long column_of(size_t block, const Exponents& x) const {
    auto it = x_index[block].find(x);
    if (it == x_index[block].end()) return -1;
    return static_cast<long long>(block_offset[block] + it->second);
  }
};

inline void enumerate_compositions(int total, int parts, std::vector<Exponents>& out) {
  Exponents current(static_cast<size_t>(parts), 0);
  // lexicographically descending: first part takes the largest share first
  struct Frame {
    int part;
    int remaining;
    int value;
  };
  std::vector<Frame> stack;
  stack.push_back({0, total, total});
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.part + 1 == parts) {
      current[static_cast<size_t>(f.part)] = f.remaining;
      out.push_back(current);
      stack.pop_back();
      continue;
    }
    if (f.value < 0) {
      stack.pop_back();
      continue;
    }
    current[static_cast<size_t>(f.part)] = f.value;
    const int rest = f.remaining - f.value;
    --f.value;
    stack.push_back({f.part + 1, rest, rest});
  }
}

inline BigradedBasis bigraded_basis(const Family& fam, int q, long long e) {
  BigradedBasis basis;
  if (q < 0) return basis;
  enumerate_compositions(q, fam.codimension(), basis.w_blocks);
  basis.x_monomials.resize(basis.w_blocks.size());
  basis.block_offset.resize(basis.w_blocks.size());
  basis.x_index.resize(basis.w_blocks.size());
  for (size_t b = 0; b < basis.w_blocks.size(); ++b) {
    long long xdeg = e;
    for (size_t j = 0; j < basis.w_blocks[b].size(); ++j)
      xdeg += static_cast<long long>(basis.w_blocks[b][j]) * fam.degrees()[j];
    basis.block_offset[b] = basis.size;
    if (xdeg >= 0) enumerate_monomials(fam.weights(), xdeg, basis.x_monomials[b]);
    for (size_t i = 0; i < basis.x_monomials[b].size(); ++i)
      basis.x_index[b].emplace(basis.x_monomials[b][i], i);
    basis.size += basis.x_monomials[b].size();
  }
  return basis;
}

/// Exact count of the basis without materializing it (overflow-safe).
inline BigInt bigraded_dimension(const Family& fam, int q, long long e) {
  if (q < 0) return BigInt(0);
  std::vector<Exponents> blocks;
  enumerate_compositions(q, fam.codimension(), blocks);
  long long max_xdeg = -1;
  std::vector<long long> degs;
  degs.reserve(blocks.size());
  for (const auto& beta : blocks) {
    long long xdeg = e;
    for (size_t j = 0; j < beta.size(); ++j)
      xdeg += static_cast<long long>(beta[j]) * fam.degrees()[j];
    degs.push_back(xdeg);
    max_xdeg = std::max(max_xdeg, xdeg);
  }
  if (max_xdeg < 0) return BigInt(0);
  const auto table = count_table<BigInt>(fam.weights(), max_xdeg);
  BigInt total(0);
  for (long long deg : degs)
    if (deg >= 0) total += table[static_cast<size_t>(deg)];
  return total;
}

/// One random member: dense coefficient vector over the degree-d_j monomials
/// of each equation, every coefficient a uniform nonzero residue, so in
/// particular the pure powers x_i^{d_j} of the unit-weight variables are
/// present (a member of Fermat type with fully generic tails).
struct RandomMember {
  std::vector<std::vector<Exponents>> monomials;  // per equation
  std::vector<std::vector<uint32_t>> coefficients;
};

inline RandomMember random_member(const Family& fam, SplitMix64& rng, uint32_t p) {
  RandomMember member;
  member.monomials.resize(fam.degrees().size());
  member.coefficients.resize(fam.degrees().size());
  for (size_t j = 0; j < fam.degrees().size(); ++j) {
    enumerate_monomials(fam.weights(), fam.degrees()[j], member.monomials[j]);
    if (member.monomials[j].empty())
      throw ValidationError("random_member: no monomial of degree " +
                            std::to_string(fam.degrees()[j]) + " in the given weights");
    member.coefficients[j].reserve(member.monomials[j].size());
    for (size_t t = 0; t < member.monomials[j].size(); ++t)
      member.coefficients[j].push_back(rng.nonzero_mod(p));
  }
  return member;
}

/// Streaming row-echelon rank over F_p.  Rows arrive one at a time, are
/// reduced against the pivots found so far, and become new pivots when
/// non-zero.  Memory is O(rank * columns).
class RankAccumulator {
 public:
  RankAccumulator(size_t columns, uint32_t p) : columns_(columns), p_(p) {}

  void add_row(std::vector<uint32_t>& row) {
    for (size_t t = 0; t < pivot_cols_.size(); ++t) {
      const uint32_t c = row[pivot_cols_[t]];
      if (c == 0) continue;
      const uint32_t factor = p_ - c;  // row += factor * pivot
      const auto& pr = pivot_rows_[t];
      for (size_t col = pivot_cols_[t]; col < columns_; ++col) {
        if (pr[col] == 0) continue;
        row[col] = static_cast<uint32_t>(
            (row[col] + static_cast<uint64_t>(factor) * pr[col]) % p_);
      }
    }
    size_t lead = columns_;
    for (size_t col = 0; col < columns_; ++col) {
      if (row[col] != 0) {
        lead = col;
        break;
      }
    }
    if (lead == columns_) return;
    const uint32_t inv = inv_mod(row[lead], p_);
    for (size_t col = lead; col < columns_; ++col)
      if (row[col] != 0) row[col] = mul_mod(row[col], inv, p_);
    // keep pivots sorted by leading column for cheaper reduction
    size_t at = pivot_cols_.size();
    while (at > 0 && pivot_cols_[at - 1] > lead) --at;
    pivot_cols_.insert(pivot_cols_.begin() + static_cast<long>(at), lead);
    pivot_rows_.insert(pivot_rows_.begin() + static_cast<long>(at), row);
  }

  size_t rank() const { return pivot_cols_.size(); }

 private:
  size_t columns_;
  uint32_t p_;
  std::vector<size_t> pivot_cols_;
  std::vector<std::vector<uint32_t>> pivot_rows_;
};

/// Rank of the bigraded piece J_{q,e} expressed in the monomial basis of
/// S_{q,e}: rows are multiplier-monomial * generator products.
///   f_j rows:  multipliers from S_{q, e - d_j}
///   G_i rows:  multipliers from S_{q-1, e + a_i}
inline size_t jacobian_piece_rank(const Family& fam, const RandomMember& member,
                                  const BigradedBasis& basis, int q, long long e, uint32_t p) {
  const int k = fam.codimension();
  const int nvars = fam.ambient_index() + 1;
  RankAccumulator acc(basis.size, p);
  std::vector<uint32_t> row;

  // block lookup: w-exponent vector -> block index in `basis`
  std::unordered_map<Exponents, size_t, detail::ExponentsHash> block_of;
  for (size_t b = 0; b < basis.w_blocks.size(); ++b) block_of.emplace(basis.w_blocks[b], b);

  // rows from the equations f_j
  for (int j = 0; j < k; ++j) {
    const BigradedBasis mult = bigraded_basis(fam, q, e - fam.degrees()[static_cast<size_t>(j)]);
    for (size_t mb = 0; mb < mult.w_blocks.size(); ++mb) {
      auto target = block_of.find(mult.w_blocks[mb]);
      if (target == block_of.end()) continue;
      for (const Exponents& gamma : mult.x_monomials[mb]) {
        row.assign(basis.size, 0);
        bool any = false;
        Exponents prod(gamma.size());
        const auto& monos = member.monomials[static_cast<size_t>(j)];
        const auto& coefs = member.coefficients[static_cast<size_t>(j)];
        for (size_t t = 0; t < monos.size(); ++t) {
          for (size_t v = 0; v < prod.size(); ++v) prod[v] = gamma[v] + monos[t][v];
          const long long col = basis.column_of(target->second, prod);
          if (col < 0) throw Error("macaulay: product monomial missing from basis");
          row[static_cast<size_t>(col)] =
              static_cast<uint32_t>((row[static_cast<size_t>(col)] + coefs[t]) % p);
          any = true;
        }
        if (any) acc.add_row(row);
      }
    }
  }

  // rows from the derivatives G_i = sum_j w_j * df_j/dx_i
  for (int i = 0; i < nvars; ++i) {
    const BigradedBasis mult =
        bigraded_basis(fam, q - 1, e + fam.weights()[static_cast<size_t>(i)]);
    if (mult.size == 0) continue;
    Exponents wshift;
    Exponents prod(static_cast<size_t>(nvars));
    for (size_t mb = 0; mb < mult.w_blocks.size(); ++mb) {
      for (const Exponents& gamma : mult.x_monomials[mb]) {
        row.assign(basis.size, 0);
        bool any = false;
        for (int j = 0; j < k; ++j) {
          wshift = mult.w_blocks[mb];
          ++wshift[static_cast<size_t>(j)];
          auto target = block_of.find(wshift);
          if (target == block_of.end()) continue;
          const auto& monos = member.monomials[static_cast<size_t>(j)];
          const auto& coefs = member.coefficients[static_cast<size_t>(j)];
          for (size_t t = 0; t < monos.size(); ++t) {
            const int exp_i = monos[t][static_cast<size_t>(i)];
            if (exp_i == 0) continue;
            for (size_t v = 0; v < prod.size(); ++v) prod[v] = gamma[v] + monos[t][v];
            --prod[static_cast<size_t>(i)];
            const long long col = basis.column_of(target->second, prod);
            if (col < 0) throw Error("macaulay: derivative monomial missing from basis");
            const uint64_t add =
                static_cast<uint64_t>(coefs[t]) * static_cast<uint32_t>(exp_i % p);
            row[static_cast<size_t>(col)] =
                static_cast<uint32_t>((row[static_cast<size_t>(col)] + add) % p);
            any = true;
          }
        }
        if (any) acc.add_row(row);
      }
    }
  }
  return acc.rank();
}

}  // namespace wci
