#include "pfold/census.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace pfold {

PatternSet::PatternSet(Alphabet alphabet, int rows, int cols)
    : alphabet_(alphabet), rows_(rows), cols_(cols) {
  if (rows <= 0 || cols <= 0) throw std::invalid_argument("PatternSet shape must be positive");
}

bool PatternSet::insert(std::string_view cells) {
  if (cells.size() != std::size_t(rows_) * cols_)
    throw std::invalid_argument("PatternSet member has the wrong shape");
  auto it = members_.find(cells);
  if (it != members_.end()) return false;
  members_.emplace(cells);
  return true;
}

bool PatternSet::contains(const Grid& g) const {
  if (g.alphabet() != alphabet_ || g.rows() != rows_ || g.cols() != cols_) return false;
  return contains(std::string_view(reinterpret_cast<const char*>(g.cells().data()), g.cells().size()));
}

bool PatternSet::subset_of(const PatternSet& other) const {
  if (alphabet_ != other.alphabet_ || rows_ != other.rows_ || cols_ != other.cols_) return false;
  for (const auto& m : members_)
    if (!other.contains(m)) return false;
  return true;
}

bool PatternSet::disjoint_with(const PatternSet& other) const {
  const PatternSet& small = size() <= other.size() ? *this : other;
  const PatternSet& big = size() <= other.size() ? other : *this;
  for (const auto& m : small.members())
    if (big.contains(m)) return false;
  return true;
}

bool PatternSet::operator==(const PatternSet& other) const {
  return alphabet_ == other.alphabet_ && rows_ == other.rows_ && cols_ == other.cols_ &&
         size() == other.size() && subset_of(other);
}

std::vector<std::string> PatternSet::sorted_members() const {
  std::vector<std::string> out(members_.begin(), members_.end());
  std::sort(out.begin(), out.end());
  return out;
}

Grid PatternSet::member_grid(std::string_view cells) const {
  Grid g(alphabet_, rows_, cols_);
  for (int r = 1; r <= rows_; ++r)
    for (int c = 1; c <= cols_; ++c)
      g.set(r, c, static_cast<std::uint8_t>(cells[std::size_t(r - 1) * cols_ + (c - 1)]));
  return g;
}

void PatternSet::merge(PatternSet&& other) {
  if (alphabet_ != other.alphabet_ || rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("PatternSet merge requires identical shapes");
  for (auto it = other.members_.begin(); it != other.members_.end();)
    members_.insert(std::move(other.members_.extract(it++).value()));
}

std::string pattern_set_to_text(const PatternSet& set) {
  std::ostringstream os;
  for (const auto& cells : set.sorted_members()) {
    os << set.rows() << ' ' << set.cols() << ' ' << alphabet_name(set.alphabet()) << ' ';
    for (char b : cells) os << letter_to_char(set.alphabet(), static_cast<std::uint8_t>(b));
    os << '\n';
  }
  return os.str();
}

namespace {

// Scan anchors in rows [row_lo, row_hi) (0-based), gathering each window into
// a reusable buffer and probing the set without per-window allocation.
void scan_band(const Grid& g, int m, int n, int row_lo, int row_hi, int col0, int stride,
               PatternSet& out) {
  const std::size_t len = std::size_t(m) * n;
  std::string buf(len, '\0');
  const int last_col = g.cols() - n;  // 0-based anchor bound
  for (int r = row_lo; r < row_hi; r += stride) {
    for (int c = col0; c <= last_col; c += stride) {
      char* dst = buf.data();
      for (int i = 0; i < m; ++i, dst += n)
        std::memcpy(dst, g.row_ptr(r + i + 1) + c, std::size_t(n));
      out.insert(std::string_view(buf));
    }
  }
}

}  // namespace

PatternSet enumerate_subpatterns(const Grid& g, int m, int n, int workers) {
  if (m < 1 || n < 1) throw std::invalid_argument("window shape must be positive");
  if (m > g.rows() || n > g.cols()) {
    std::ostringstream os;
    os << "window " << m << "x" << n << " larger than grid " << g.rows() << "x" << g.cols();
    throw std::invalid_argument(os.str());
  }
  const int anchor_rows = g.rows() - m + 1;
  workers = std::max(1, std::min(workers, anchor_rows));
  if (workers == 1) {
    PatternSet out(g.alphabet(), m, n);
    scan_band(g, m, n, 0, anchor_rows, 0, 1, out);
    return out;
  }
  std::vector<PatternSet> local(workers, PatternSet(g.alphabet(), m, n));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    const int lo = static_cast<int>(std::int64_t(anchor_rows) * w / workers);
    const int hi = static_cast<int>(std::int64_t(anchor_rows) * (w + 1) / workers);
    pool.emplace_back([&, w, lo, hi] { scan_band(g, m, n, lo, hi, 0, 1, local[w]); });
  }
  for (auto& t : pool) t.join();
  PatternSet out = std::move(local[0]);
  for (int w = 1; w < workers; ++w) out.merge(std::move(local[w]));
  return out;
}

PatternSet enumerate_subpatterns_strided(const Grid& g, int m, int n, int r0, int c0, int stride) {
  if (m > g.rows() || n > g.cols()) throw std::invalid_argument("window larger than grid");
  if (r0 < 1 || c0 < 1 || stride < 1) throw std::invalid_argument("bad strided scan origin");
  PatternSet out(g.alphabet(), m, n);
  scan_band(g, m, n, r0 - 1, g.rows() - m + 1, c0 - 1, stride, out);
  return out;
}

namespace {

void check_window_budget(int m, int n, const CensusOptions& opts) {
  if (m < 1 || n < 1) throw std::invalid_argument("window shape must be positive");
  if (m > opts.max_dim || n > opts.max_dim) {
    std::ostringstream os;
    os << "window " << m << "x" << n << " exceeds the enumeration budget (max dim "
       << opts.max_dim << ")";
    throw budget_error(os.str());
  }
}

Grid level_grid(Structure s, int level, const CensusOptions& opts) {
  return s == Structure::T ? t_supertile(level, opts.depth_cap, opts.subst())
                           : s_supertile(level, opts.depth_cap, opts.subst());
}

}  // namespace

CensusResult stable_pattern_set(Structure s, int m, int n, const CensusOptions& opts) {
  check_window_budget(m, n, opts);
  int k = s == Structure::S ? 1 : 0;
  while ((1 << k) < std::max(m, n)) ++k;
  PatternSet prev = enumerate_subpatterns(level_grid(s, k, opts), m, n, opts.workers);
  while (k < opts.depth_cap) {
    PatternSet next = enumerate_subpatterns(level_grid(s, k + 1, opts), m, n, opts.workers);
    if (!prev.subset_of(next)) {
      std::ostringstream os;
      os << "window-set chain not monotone between levels " << k << " and " << k + 1 << " for "
         << structure_name(s) << " " << m << "x" << n;
      throw std::runtime_error(os.str());
    }
    if (prev.size() == next.size()) return CensusResult{std::move(prev), k};
    prev = std::move(next);
    ++k;
  }
  std::ostringstream os;
  os << "no plateau for " << structure_name(s) << " " << m << "x" << n << " up to depth cap "
     << opts.depth_cap;
  throw budget_error(os.str());
}

int p_class_index(int i) {
  if (i < 1) throw std::invalid_argument("class index must be positive");
  return (i - 1) % 2 + 1;
}

int q_class_index(int i) {
  if (i < 1) throw std::invalid_argument("class index must be positive");
  return (i - 1) % 4 + 1;
}

namespace {

PatternSet crop_images(const PatternSet& base_t, Alphabet out_alphabet, int times, int i, int j,
                       const SubstitutionSystem& rules) {
  if (base_t.alphabet() != Alphabet::A16)
    throw std::invalid_argument("class sets are built from patterns over the 16-letter alphabet");
  const int m = base_t.rows(), n = base_t.cols();
  PatternSet out(out_alphabet, m, n);
  std::string cropped(std::size_t(m) * n, '\0');
  for (const auto& cells : base_t.members()) {
    Grid g = base_t.member_grid(cells);
    for (int t = 1; t < times; ++t) g = mu_apply(g, rules);
    const Grid img = out_alphabet == Alphabet::A16 ? mu_apply(g, rules) : phi_apply(g, rules);
    for (int r = 0; r < m; ++r)
      std::memcpy(cropped.data() + std::size_t(r) * n,
                  img.row_ptr(i + r) + (j - 1), std::size_t(n));
    out.insert(std::string_view(cropped));
  }
  return out;
}

}  // namespace

PatternSet pij_from_base(const PatternSet& base_t, Structure target, int i, int j,
                         const SubstitutionSystem& rules) {
  i = p_class_index(i);
  j = p_class_index(j);
  const Alphabet out = target == Structure::T ? Alphabet::A16 : Alphabet::B4;
  return crop_images(base_t, out, 1, i, j, rules);
}

PatternSet qij_from_base(const PatternSet& base_t, int i, int j, const SubstitutionSystem& rules) {
  i = q_class_index(i);
  j = q_class_index(j);
  return crop_images(base_t, Alphabet::A16, 2, i, j, rules);
}

PatternSet pij_set(Structure target, int m, int n, int i, int j, const CensusOptions& opts) {
  const CensusResult base = stable_pattern_set(Structure::T, m, n, opts);
  return pij_from_base(base.set, target, i, j, opts.subst());
}

PatternSet qij_set(int m, int n, int i, int j, const CensusOptions& opts) {
  const CensusResult base = stable_pattern_set(Structure::T, m, n, opts);
  return qij_from_base(base.set, i, j, opts.subst());
}

std::uint64_t& ClassCounts::at(char family, int i, int j) {
  switch (family) {
    case 'a': return a[i - 1][j - 1];
    case 'b': return b[i - 1][j - 1];
    case 'c': return c[i - 1][j - 1];
  }
  throw std::invalid_argument("family must be a, b, or c");
}

std::uint64_t ClassCounts::at(char family, int i, int j) const {
  return const_cast<ClassCounts*>(this)->at(family, i, j);
}

namespace {

void fill_family(std::uint64_t (&dst)[2][2], const PatternSet& base,
                 const SubstitutionSystem& rules) {
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      dst[i - 1][j - 1] = pij_from_base(base, Structure::T, i, j, rules).size();
}

}  // namespace

ClassCounts class_counts_bruteforce(int n, const CensusOptions& opts) {
  if (n < 1) throw std::invalid_argument("class counts need n >= 1");
  ClassCounts out;
  CensusCache cache;
  fill_family(out.a, cache.get(Structure::T, n, n, opts)->set, opts.subst());
  fill_family(out.b, cache.get(Structure::T, n, n + 1, opts)->set, opts.subst());
  fill_family(out.c, cache.get(Structure::T, n + 1, n, opts)->set, opts.subst());
  return out;
}

std::uint64_t complexity_bruteforce(int n, const CensusOptions& opts) {
  if (n < 1) throw std::invalid_argument("complexity needs n >= 1");
  return stable_pattern_set(Structure::S, n, n, opts).set.size();
}

std::shared_ptr<const CensusResult> CensusCache::get(Structure s, int m, int n,
                                                     const CensusOptions& opts) {
  const auto key = std::make_tuple(static_cast<int>(s), m, n);
  auto it = store_.find(key);
  if (it != store_.end()) return it->second;
  auto result = std::make_shared<const CensusResult>(stable_pattern_set(s, m, n, opts));
  store_.emplace(key, result);
  return result;
}

ClassCounts CensusCache::class_counts(int n, const CensusOptions& opts) {
  ClassCounts out;
  fill_family(out.a, get(Structure::T, n, n, opts)->set, opts.subst());
  fill_family(out.b, get(Structure::T, n, n + 1, opts)->set, opts.subst());
  fill_family(out.c, get(Structure::T, n + 1, n, opts)->set, opts.subst());
  return out;
}

std::uint64_t CensusCache::complexity(int n, const CensusOptions& opts) {
  return get(Structure::S, n, n, opts)->set.size();
}

}  // namespace pfold
