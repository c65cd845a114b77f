#include <esb/homology.hpp>

#include <esb/errors.hpp>

#include <algorithm>
#include <optional>
#include <thread>
#include <unordered_map>

namespace esb {
namespace {

using Row = std::vector<long>;
using Matrix = std::vector<Row>;

long rank_mod_p(Matrix m, long p) {
  long rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (auto& row : m)
    for (auto& x : row) x = ((x % p) + p) % p;
  auto inverse = [p](long a) {
    long result = 1, base = a, e = p - 2;
    while (e > 0) {
      if (e & 1) result = static_cast<long>((static_cast<__int128>(result) * base) % p);
      base = static_cast<long>((static_cast<__int128>(base) * base) % p);
      e >>= 1;
    }
    return result;
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    const long inv = inverse(m[r][c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const long factor = static_cast<long>((static_cast<__int128>(m[i][c]) * inv) % p);
      for (std::size_t j = c; j < cols; ++j)
        m[i][j] = static_cast<long>(((m[i][j] - static_cast<__int128>(factor) * m[r][j]) % p + p) % p);
    }
    ++r;
    ++rank;
  }
  return rank;
}

// Fraction-free (Bareiss) elimination; every intermediate entry is a minor
// of the input, so each division is exact.
template <typename T>
long rank_bareiss(std::vector<std::vector<T>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  T previous = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / previous;
      m[i][c] = 0;
    }
    previous = m[r][c];
    ++r;
  }
  return static_cast<long>(r);
}

// Bareiss in 64 bits; nullopt on overflow.
std::optional<long> rank_bareiss_small(Matrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  long previous = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        long a, b, diff;
        if (__builtin_mul_overflow(m[r][c], m[i][j], &a) || __builtin_mul_overflow(m[i][c], m[r][j], &b) ||
            __builtin_sub_overflow(a, b, &diff))
          return std::nullopt;
        m[i][j] = diff / previous;
      }
      m[i][c] = 0;
    }
    previous = m[r][c];
    ++r;
  }
  return static_cast<long>(r);
}

// Reduced homology of the complex whose faces (empty face included) are
// `faces`, sorted by size.
std::map<int, long> reduced_homology_of(const std::vector<VertexSet>& faces, long characteristic) {
  std::map<int, std::vector<VertexSet>> by_dim;
  for (VertexSet f : faces) by_dim[cardinality(f) - 1].push_back(f);
  if (by_dim.empty()) return {};  // void complex
  const int top = by_dim.rbegin()->first;

  // rank of the boundary map C_k -> C_{k-1}, for 0 <= k <= top
  std::map<int, long> boundary_rank;
  for (int k = 0; k <= top; ++k) {
    const auto& cells = by_dim[k];
    const auto& lower = by_dim[k - 1];
    if (cells.empty() || lower.empty()) {
      boundary_rank[k] = 0;
      continue;
    }
    if (k == 0) {
      boundary_rank[k] = 1;  // augmentation onto the empty face
      continue;
    }
    std::unordered_map<VertexSet, std::size_t> row_of;
    for (std::size_t i = 0; i < lower.size(); ++i) row_of[lower[i]] = i;
    Matrix m(lower.size(), Row(cells.size(), 0));
    for (std::size_t col = 0; col < cells.size(); ++col) {
      long sign = 1;
      for (VertexSet rest = cells[col]; rest; rest &= rest - 1) {
        const VertexSet low = rest & (~rest + 1);
        m[row_of.at(cells[col] & ~low)][col] = sign;
        sign = -sign;
      }
    }
    boundary_rank[k] = matrix_rank(std::move(m), characteristic);
  }

  std::map<int, long> ranks;
  for (int k = -1; k <= top; ++k) {
    const long cells = static_cast<long>(by_dim[k].size());
    const long in = k >= 0 ? boundary_rank[k] : 0;
    const long out = k + 1 <= top ? boundary_rank[k + 1] : 0;
    const long rank = cells - in - out;
    if (rank != 0) ranks[k] = rank;
  }
  return ranks;
}

void check_vertex_limit(const SimplicialComplex& c, int limit) {
  if (c.n_vertices() > limit)
    throw SizeLimitError("complex has " + std::to_string(c.n_vertices()) + " vertices, over the limit of " +
                         std::to_string(limit));
}

}  // namespace

void validate_characteristic(long p) {
  if (p == 0) return;
  bool prime = p >= 2;
  for (long q = 2; prime && q * q <= p; ++q) prime = p % q != 0;
  if (!prime) throw ValidationError("characteristic must be 0 or a prime, got " + std::to_string(p));
}

long matrix_rank(std::vector<std::vector<long>> rows, long characteristic) {
  validate_characteristic(characteristic);
  if (rows.empty()) return 0;
  if (characteristic != 0) return rank_mod_p(std::move(rows), characteristic);
  if (auto small = rank_bareiss_small(rows)) return *small;
  std::vector<std::vector<Integer>> big;
  for (const auto& row : rows) big.emplace_back(row.begin(), row.end());
  return rank_bareiss(std::move(big));
}

std::map<int, long> reduced_homology_ranks(const SimplicialComplex& c, const HomologyOptions& options) {
  validate_characteristic(options.characteristic);
  check_vertex_limit(c, options.vertex_limit);
  return reduced_homology_of(c.faces(), options.characteristic);
}

BettiTable hochster_betti(const SimplicialComplex& c, const HomologyOptions& options) {
  validate_characteristic(options.characteristic);
  check_vertex_limit(c, options.vertex_limit);
  const auto faces = c.faces();
  const VertexSet subsets = VertexSet{1} << c.n_vertices();

  auto work = [&](VertexSet begin, VertexSet end) {
    BettiTable partial(c.n_vertices());
    std::vector<VertexSet> induced;
    for (VertexSet w = begin; w < end; ++w) {
      induced.clear();
      for (VertexSet f : faces)
        if ((f & ~w) == 0) induced.push_back(f);
      const long size = cardinality(w);
      for (const auto& [k, rank] : reduced_homology_of(induced, options.characteristic))
        partial.add(size - 1 - k, size, rank);
    }
    return partial;
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, 64));
  std::vector<BettiTable> partials(threads);
  if (threads == 1) {
    partials[0] = work(0, subsets);
  } else {
    std::vector<std::thread> pool;
    const VertexSet chunk = (subsets + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const VertexSet begin = std::min(subsets, chunk * t);
      const VertexSet end = std::min(subsets, begin + chunk);
      pool.emplace_back([&, t, begin, end] { partials[t] = work(begin, end); });
    }
    for (auto& th : pool) th.join();
  }
  BettiTable table(c.n_vertices());
  for (const auto& partial : partials)
    for (const auto& [key, value] : partial.entries()) table.add(key.first, key.second, value);
  return table;
}

}  // namespace esb
