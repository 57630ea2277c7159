#include "arc2rep/decat.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace arc2rep {

LaurentMatrix LaurentMatrix::identity(int n) { return scalar(n, Laurent(1)); }

LaurentMatrix LaurentMatrix::scalar(int n, const Laurent& s) {
  LaurentMatrix m(n, n);
  for (int x = 0; x < n; ++x) m.at(x, x) = s;
  return m;
}

bool LaurentMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

std::string LaurentMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < rows_; ++r) {
    if (r) os << "; ";
    for (int c = 0; c < cols_; ++c) os << (c ? ", " : "") << at(r, c).str();
  }
  os << "]";
  return os.str();
}

LaurentMatrix& LaurentMatrix::operator+=(const LaurentMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("LaurentMatrix: shape mismatch");
  for (std::size_t x = 0; x < e_.size(); ++x) e_[x] += o.e_[x];
  return *this;
}

LaurentMatrix& LaurentMatrix::operator-=(const LaurentMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("LaurentMatrix: shape mismatch");
  for (std::size_t x = 0; x < e_.size(); ++x) e_[x] -= o.e_[x];
  return *this;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("LaurentMatrix: shape mismatch");
  LaurentMatrix r(a.rows_, b.cols_);
  for (int x = 0; x < a.rows_; ++x)
    for (int y = 0; y < a.cols_; ++y) {
      const Laurent& l = a.at(x, y);
      if (l.is_zero()) continue;
      for (int z = 0; z < b.cols_; ++z)
        if (!b.at(y, z).is_zero()) r.at(x, z) += l * b.at(y, z);
    }
  return r;
}

LaurentMatrix operator*(const Laurent& s, const LaurentMatrix& m) {
  LaurentMatrix r = m;
  for (auto& x : r.e_) x = s * x;
  return r;
}

Laurent quantum_two() { return Laurent::quantum_int(2); }

namespace {

int matching_index(const Matching& m) {
  static std::mutex mu;
  static std::map<int, std::map<Matching, int>> index;
  std::lock_guard<std::mutex> lock(mu);
  auto& idx = index[m.r()];
  if (idx.empty()) {
    const auto& all = enumerate_matchings(m.r());
    for (int x = 0; x < static_cast<int>(all.size()); ++x) idx.emplace(all[x], x);
  }
  return idx.at(m);
}

Laurent power(const Laurent& p, int e) {
  Laurent r(1);
  for (int x = 0; x < e; ++x) r *= p;
  return r;
}

}  // namespace

Decategorifier::Decategorifier(int k, int n) : k_(k), n_(n), weights_(enumerate_weights(k, n)), arc_(n) {}

int Decategorifier::weight_dim(const Weight& lam) const {
  return static_cast<int>(enumerate_matchings(lam.gamma()).size());
}

DecatMatrix Decategorifier::summand_matrix(const Word& w, const Weight& lam) {
  DecatMatrix d;
  d.word = w;
  d.source = lam;
  auto top = add_content(lam, w);
  d.target_valid = top && top->valid();
  if (d.target_valid) d.target = *top;
  d.m = LaurentMatrix(d.target_valid ? weight_dim(d.target) : 0, weight_dim(lam));
  if (!d.target_valid) return d;
  auto b = arc_.bimodule(w, lam);
  if (b->zero) return d;
  for (int r = 0; r < d.m.rows(); ++r)
    for (int c = 0; c < d.m.cols(); ++c) d.m.at(r, c) = b->summand_graded_dim(r, c);
  return d;
}

LaurentMatrix Decategorifier::cartan(const Weight& lam) { return summand_matrix({}, lam).m; }

DecatMatrix Decategorifier::projective_matrix(int i, const Weight& lam) {
  DecatMatrix d;
  d.word = {i};
  d.source = lam;
  auto top = apply_root(lam, i);
  d.target_valid = top.has_value();
  if (d.target_valid) d.target = *top;
  d.m = LaurentMatrix(d.target_valid ? weight_dim(d.target) : 0, weight_dim(lam));
  auto t = d.target_valid ? generator_tangle(i, lam) : std::nullopt;
  if (!t) return d;
  const auto& bottoms = enumerate_matchings(lam.gamma());
  int shift = lam.gamma() - d.target.gamma();
  for (int a = 0; a < static_cast<int>(bottoms.size()); ++a) {
    FlatTangle f = glue(t->tangle, as_tangle(bottoms[a]));
    int b = matching_index(Matching(f.partner));
    d.m.at(b, a) = power(quantum_two(), f.circles).shifted(shift);
  }
  return d;
}

DecatMatrix Decategorifier::projective_matrix(const Word& w, const Weight& lam) {
  DecatMatrix d;
  d.word = w;
  d.source = lam;
  auto top = add_content(lam, w);
  d.target_valid = top && top->valid();
  if (d.target_valid) d.target = *top;
  d.m = LaurentMatrix(d.target_valid ? weight_dim(d.target) : 0, weight_dim(lam));
  auto ws = word_weights(w, lam);
  if (!d.target_valid || !ws) return d;
  LaurentMatrix acc = LaurentMatrix::identity(weight_dim(lam));
  for (std::size_t q = w.size(); q-- > 0;) acc = projective_matrix(w[q], (*ws)[q + 1]).m * acc;
  d.m = std::move(acc);
  return d;
}

std::vector<DecatMatrix> decat_matrix(const Word& w, int k, int n) {
  Decategorifier d(k, n);
  std::vector<DecatMatrix> out;
  for (const auto& lam : d.weights()) out.push_back(d.summand_matrix(w, lam));
  return out;
}

int DecatReport::failures() const {
  int f = 0;
  for (const auto& c : checks) f += c.pass ? 0 : 1;
  return f;
}

namespace {

std::vector<int> signed_indices(int n) {
  std::vector<int> out;
  for (int i = 1; i < n; ++i) out.push_back(i);
  for (int i = 1; i < n; ++i) out.push_back(-i);
  return out;
}

void record(DecatReport& rep, std::string rel, const Weight& lam, std::vector<int> idx, const LaurentMatrix& lhs,
            const LaurentMatrix& rhs) {
  DecatCheck c{std::move(rel), lam, std::move(idx), lhs == rhs, ""};
  if (!c.pass) c.detail = "lhs " + lhs.str() + " rhs " + rhs.str();
  rep.checks.push_back(std::move(c));
}

void all_words(int n, int len, Word& cur, const std::function<void(const Word&)>& f) {
  if (static_cast<int>(cur.size()) == len) {
    f(cur);
    return;
  }
  for (int i : signed_indices(n)) {
    cur.push_back(i);
    all_words(n, len, cur, f);
    cur.pop_back();
  }
}

}  // namespace

DecatReport check_qgroup(int k, int n, int max_word) {
  Decategorifier d(k, n);
  DecatReport rep;
  const auto idx = signed_indices(n);
  auto X = [&](const Word& w, const Weight& lam) { return d.projective_matrix(w, lam).m; };
  auto K = [&](int i, const Weight& lam) {
    return LaurentMatrix::scalar(d.weight_dim(lam), Laurent::monomial(cartan_pairing(i, lam)));
  };
  for (const auto& lam : d.weights()) {
    int dim = d.weight_dim(lam);
    for (int i : idx) {
      record(rep, "k-inverse", lam, {i}, K(i, lam) * K(-i, lam), LaurentMatrix::identity(dim));
      for (int j : idx) {
        record(rep, "k-commute", lam, {i, j}, K(i, lam) * K(j, lam), K(j, lam) * K(i, lam));
        // K_i E_j I_lam = q^{a_ij} E_j K_i I_lam, with K_i read off the actual target weight.
        DecatMatrix e = d.projective_matrix(j, lam);
        if (e.target_valid)
          record(rep, "k-e", lam, {i, j}, K(i, e.target) * e.m,
                 Laurent::monomial(cartan_entry(i, j)) * (e.m * K(i, lam)));
      }
    }
    for (int i : idx)
      for (int j : idx) {
        if (sgn(i) != sgn(j)) continue;
        // (q - q^{-1}) (E_i E_{-j} - E_{-j} E_i) = delta_ij (q^p - q^{-p}) Id.
        Laurent qq = Laurent::monomial(1) - Laurent::monomial(-1);
        LaurentMatrix lhs = qq * (X({i, -j}, lam) - X({-j, i}, lam));
        LaurentMatrix rhs(lhs.rows(), lhs.cols());
        if (i == j) {
          int p = cartan_pairing(i, lam);
          rhs = LaurentMatrix::scalar(dim, Laurent::monomial(p) - Laurent::monomial(-p));
        }
        record(rep, "commutator", lam, {i, j}, lhs, rhs);
        int gap = iabs(i) - iabs(j);
        if (gap > 1 || gap < -1) record(rep, "distant-commute", lam, {i, j}, X({i, j}, lam), X({j, i}, lam));
        if (gap == 1 || gap == -1) {
          LaurentMatrix serre = X({i, i, j}, lam) + X({j, i, i}, lam) - quantum_two() * X({i, j, i}, lam);
          record(rep, "serre", lam, {i, j}, serre, LaurentMatrix(serre.rows(), serre.cols()));
        }
      }
    // Summand matrices factor through the Cartan matrix of the target weight.
    for (int len = 0; len <= max_word; ++len) {
      Word cur;
      all_words(n, len, cur, [&](const Word& w) {
        DecatMatrix dm = d.summand_matrix(w, lam);
        if (!dm.target_valid) return;
        record(rep, "summand-factorization", lam, w, dm.m, d.cartan(dm.target) * X(w, lam));
      });
    }
  }
  return rep;
}

DecatReport bimodule_dims(Decategorifier& d, const Weight& lam, int i, int j) {
  DecatReport rep;
  auto D = [&](const Word& w) { return d.summand_matrix(w, lam).m; };
  if (i > 0 && j > 0 && i != j) record(rep, "bimodule-opposite-commute", lam, {i, j}, D({i, -j}), D({-j, i}));
  if (sgn(i) == sgn(j)) {
    int gap = iabs(i) - iabs(j);
    if (gap > 1 || gap < -1) record(rep, "bimodule-distant-commute", lam, {i, j}, D({i, j}), D({j, i}));
    if (gap == 1 || gap == -1)
      record(rep, "bimodule-serre", lam, {i, j}, D({i, i, j}) + D({j, i, i}), quantum_two() * D({i, j, i}));
  }
  // K_i E_j I_lam = E_j K_i I_lam {a_ij} as graded dimensions.
  DecatMatrix e = d.summand_matrix({j}, lam);
  if (e.target_valid)
    record(rep, "bimodule-k-e", lam, {i, j}, Laurent::monomial(cartan_pairing(i, e.target)) * e.m,
           Laurent::monomial(cartan_pairing(i, lam) + cartan_entry(i, j)) * e.m);
  if (i == j) {
    int p = cartan_pairing(i, lam);
    if (p >= 0 && p <= 2) {
      LaurentMatrix extra = p == 2 ? quantum_two() * d.cartan(lam) : (p == 1 ? d.cartan(lam) : LaurentMatrix());
      LaurentMatrix rhs = D({-i, i});
      if (p > 0) rhs += extra;
      record(rep, "bimodule-commutator", lam, {i}, D({i, -i}), rhs);
    }
  }
  return rep;
}

DecatReport bimodule_dims_report(int k, int n) {
  Decategorifier d(k, n);
  DecatReport rep;
  for (const auto& lam : d.weights())
    for (int i : signed_indices(n))
      for (int j : signed_indices(n)) {
        auto r = bimodule_dims(d, lam, i, j);
        for (auto& c : r.checks) rep.checks.push_back(std::move(c));
      }
  return rep;
}

long long ssyt_count(const Weight& lam, int k) {
  // Fill the k x 2 diagram row by row; rows weakly increase, columns strictly.
  std::vector<int> left(k, 0), right(k, 0);
  std::vector<int> budget = lam.v;
  int n = lam.n();
  long long count = 0;
  std::function<void(int)> fill = [&](int cell) {
    if (cell == 2 * k) {
      ++count;
      return;
    }
    int row = cell / 2;
    bool is_left = cell % 2 == 0;
    int lo = 1;
    if (is_left && row > 0) lo = left[row - 1] + 1;
    if (!is_left) {
      lo = left[row];
      if (row > 0) lo = std::max(lo, right[row - 1] + 1);
    }
    for (int v = lo; v <= n; ++v) {
      if (budget[v - 1] == 0) continue;
      --budget[v - 1];
      (is_left ? left : right)[row] = v;
      fill(cell + 1);
      ++budget[v - 1];
    }
  };
  if (lam.total() == 2 * k) fill(0);
  return count;
}

long long weyl_dimension(int k, int n) {
  using boost::multiprecision::cpp_int;
  std::vector<int> part(n, 0);
  for (int x = 0; x < k && x < n; ++x) part[x] = 2;
  cpp_int num = 1, den = 1;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      num *= part[a] - part[b] + b - a;
      den *= b - a;
    }
  return static_cast<long long>(num / den);
}

WeightDimEntry weight_dim_check(const Weight& lam, int k, int n) {
  (void)n;
  WeightDimEntry e;
  e.lam = lam;
  e.gamma = lam.gamma();
  e.matchings = static_cast<long long>(enumerate_matchings(e.gamma).size());
  e.catalan = catalan(e.gamma);
  e.printed_formula = catalan(2 * e.gamma);
  e.ssyt = ssyt_count(lam, k);
  e.pass = e.matchings == e.catalan && e.catalan == e.ssyt;
  return e;
}

int WeightDimReport::failures() const {
  int f = 0;
  for (const auto& e : entries) f += e.pass ? 0 : 1;
  return f;
}

WeightDimReport weight_dim_report(int k, int n) {
  WeightDimReport rep;
  for (const auto& lam : enumerate_weights(k, n)) {
    rep.entries.push_back(weight_dim_check(lam, k, n));
    rep.total += rep.entries.back().ssyt;
  }
  rep.weyl = weyl_dimension(k, n);
  return rep;
}

}  // namespace arc2rep
