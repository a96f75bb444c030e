#ifndef DIACAT_DECAT_HPP_
#define DIACAT_DECAT_HPP_

// Grothendieck groups, traces, Chern character, Karoubi envelopes and
// Young idempotents, in the instances that are computable exactly.

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "diagram.hpp"
#include "error.hpp"
#include "matrix.hpp"
#include "permutation.hpp"
#include "scalar.hpp"

namespace diacat {

// ----- Vect -----

// Class in K_0(Vect) of sum_i coeff_i [k^{dim_i}], read as an integer.
inline long long k0_vect(std::vector<std::pair<long long, long long>> const& items) {
  long long total = 0;
  for (auto const& [coeff, dim] : items) {
    if (dim < 0) throw Error(ErrorCode::invalid_argument, "negative dimension");
    total += coeff * dim;
  }
  return total;
}

// Formal integer combination of isomorphism classes.
struct K0Elem {
  std::map<std::string, long long> coeffs;

  K0Elem& add(std::string const& key, long long c) {
    auto& v = coeffs[key];
    v += c;
    if (v == 0) coeffs.erase(key);
    return *this;
  }
  friend K0Elem operator+(K0Elem a, K0Elem const& b) {
    for (auto const& [k, c] : b.coeffs) a.add(k, c);
    return a;
  }
  friend bool operator==(K0Elem const&, K0Elem const&) = default;
};

inline Rational trace_vect(Matrix const& f) {
  if (!f.is_square()) {
    throw Error(ErrorCode::shape_mismatch, "trace of non-square " + f.shape());
  }
  return f.trace();
}

// [f (+) g] = [f] + [g] in Tr(Vect).
inline bool trace_sum_check(Matrix const& f, Matrix const& g) {
  return trace_vect(block_diagonal(f, g)) == trace_vect(f) + trace_vect(g);
}

struct TraceClass {
  Matrix representative;
  Rational reduced;
};

inline TraceClass trace_class(Matrix const& f) { return {f, trace_vect(f)}; }

inline bool trace_equivalent(Matrix const& f, Matrix const& g) {
  return trace_vect(f) == trace_vect(g);
}

// [X] |-> [1_X].
inline TraceClass chern_vect(long long dim) {
  if (dim < 0) throw Error(ErrorCode::invalid_argument, "negative dimension");
  return trace_class(Matrix::identity(static_cast<std::size_t>(dim)));
}

// ----- additive envelope -----

// A matrix of morphisms between formal direct sums; block (j, i) maps
// source[i] to target[j].
template <class Obj, class Block>
struct FormalSumMorphism {
  std::vector<Obj> source;
  std::vector<Obj> target;
  std::vector<std::vector<Block>> blocks;

  Block const& block(std::size_t j, std::size_t i) const { return blocks.at(j).at(i); }
};

using VectSum = FormalSumMorphism<std::size_t, Matrix>;
using DiagramSum = FormalSumMorphism<ObjectWord, LinearCombination>;

inline VectSum make_vect_sum(std::vector<std::size_t> source,
                             std::vector<std::size_t> target,
                             std::vector<std::vector<Matrix>> blocks) {
  if (blocks.size() != target.size()) {
    throw Error(ErrorCode::shape_mismatch, "one block row per target summand");
  }
  for (std::size_t j = 0; j < target.size(); ++j) {
    if (blocks[j].size() != source.size()) {
      throw Error(ErrorCode::shape_mismatch, "one block column per source summand");
    }
    for (std::size_t i = 0; i < source.size(); ++i) {
      if (blocks[j][i].rows() != target[j] || blocks[j][i].cols() != source[i]) {
        throw Error(ErrorCode::shape_mismatch, "block has shape " + blocks[j][i].shape());
      }
    }
  }
  return {std::move(source), std::move(target), std::move(blocks)};
}

// g o f by the matrix product rule.
inline VectSum compose(VectSum const& g, VectSum const& f) {
  if (g.source != f.target) {
    throw Error(ErrorCode::type_mismatch, "summands do not match");
  }
  std::vector<std::vector<Matrix>> out;
  for (std::size_t k = 0; k < g.target.size(); ++k) {
    out.emplace_back();
    for (std::size_t i = 0; i < f.source.size(); ++i) {
      Matrix acc(g.target[k], f.source[i]);
      for (std::size_t j = 0; j < f.target.size(); ++j) acc += g.block(k, j) * f.block(j, i);
      out.back().push_back(std::move(acc));
    }
  }
  return {f.source, g.target, std::move(out)};
}

inline DiagramSum compose(DiagramSum const& g, DiagramSum const& f) {
  if (g.source != f.target) {
    throw Error(ErrorCode::type_mismatch, "summands do not match");
  }
  std::vector<std::vector<LinearCombination>> out;
  for (std::size_t k = 0; k < g.target.size(); ++k) {
    out.emplace_back();
    for (std::size_t i = 0; i < f.source.size(); ++i) {
      LinearCombination acc(f.source[i], g.target[k], g.block(k, 0).params());
      for (std::size_t j = 0; j < f.target.size(); ++j) {
        acc += lc_compose(g.block(k, j), f.block(j, i));
      }
      out.back().push_back(std::move(acc));
    }
  }
  return {f.source, g.target, std::move(out)};
}

// The single matrix k^{sum source} -> k^{sum target}.
inline Matrix flatten(VectSum const& f) {
  std::size_t rows = std::accumulate(f.target.begin(), f.target.end(), std::size_t{0});
  std::size_t cols = std::accumulate(f.source.begin(), f.source.end(), std::size_t{0});
  Matrix m(rows, cols);
  std::size_t r0 = 0;
  for (std::size_t j = 0; j < f.target.size(); ++j) {
    std::size_t c0 = 0;
    for (std::size_t i = 0; i < f.source.size(); ++i) {
      for (std::size_t a = 0; a < f.target[j]; ++a) {
        for (std::size_t b = 0; b < f.source[i]; ++b) m(r0 + a, c0 + b) = f.block(j, i)(a, b);
      }
      c0 += f.source[i];
    }
    r0 += f.target[j];
  }
  return m;
}

// Sum of the traces of the diagonal blocks.
inline Rational trace(VectSum const& f) {
  if (f.source != f.target) {
    throw Error(ErrorCode::shape_mismatch, "trace needs an endomorphism");
  }
  Rational t = 0;
  for (std::size_t i = 0; i < f.source.size(); ++i) t += f.block(i, i).trace();
  return t;
}

// ----- the group algebra kS_n -----

class GroupAlgebraElem {
 public:
  using Terms = std::map<Permutation, Rational>;

  GroupAlgebraElem() = default;
  explicit GroupAlgebraElem(int n) : n_(n) {}

  static GroupAlgebraElem basis(Permutation const& p, Rational const& c = 1) {
    GroupAlgebraElem e(p.size());
    e.add(p, c);
    return e;
  }
  static GroupAlgebraElem one(int n) { return basis(Permutation::identity(n)); }

  int n() const { return n_; }
  Terms const& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(Permutation const& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(Permutation const& p, Rational const& c) {
    if (p.size() != n_) {
      throw Error(ErrorCode::shape_mismatch, "permutation of the wrong size");
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(p, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  GroupAlgebraElem& operator+=(GroupAlgebraElem const& b) {
    check(b);
    for (auto const& [p, c] : b.terms_) add(p, c);
    return *this;
  }
  GroupAlgebraElem& operator-=(GroupAlgebraElem const& b) {
    check(b);
    for (auto const& [p, c] : b.terms_) add(p, -c);
    return *this;
  }
  friend GroupAlgebraElem operator+(GroupAlgebraElem a, GroupAlgebraElem const& b) {
    return a += b;
  }
  friend GroupAlgebraElem operator-(GroupAlgebraElem a, GroupAlgebraElem const& b) {
    return a -= b;
  }
  friend GroupAlgebraElem operator*(Rational const& q, GroupAlgebraElem a) {
    GroupAlgebraElem r(a.n_);
    for (auto const& [p, c] : a.terms_) r.add(p, q * c);
    return r;
  }
  // a * b: b first, then a (composition of permutations).
  friend GroupAlgebraElem operator*(GroupAlgebraElem const& a,
                                    GroupAlgebraElem const& b) {
    a.check(b);
    GroupAlgebraElem r(a.n_);
    for (auto const& [p, c] : a.terms_) {
      for (auto const& [q, d] : b.terms_) r.add(p * q, c * d);
    }
    return r;
  }
  friend bool operator==(GroupAlgebraElem const& a, GroupAlgebraElem const& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  std::string to_text() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto const& [p, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "{" + c.get_str() + "} " + p.to_text();
    }
    return s;
  }

 private:
  void check(GroupAlgebraElem const& b) const {
    if (b.n_ != n_) throw Error(ErrorCode::shape_mismatch, "kS_n size mismatch");
  }

  int n_ = 0;
  Terms terms_;
};

// Trace of kS_n: coefficients summed over conjugacy classes (cycle types).
inline std::map<std::vector<int>, Rational> trace_class_sym(GroupAlgebraElem const& a) {
  std::map<std::vector<int>, Rational> out;
  for (auto const& [p, c] : a.terms()) out[p.cycle_type()] += c;
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

inline bool trace_equivalent(GroupAlgebraElem const& a, GroupAlgebraElem const& b) {
  return trace_class_sym(a) == trace_class_sym(b);
}

// ----- partitions and tableaux -----

using Partition = std::vector<int>;
using Tableau   = std::vector<std::vector<int>>;

inline int partition_size(Partition const& l) {
  return std::accumulate(l.begin(), l.end(), 0);
}

inline void validate_partition(Partition const& l) {
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l[i] <= 0 || (i && l[i] > l[i - 1])) {
      throw Error(ErrorCode::invalid_partition,
                  "parts must be positive and non-increasing");
    }
  }
}

inline Partition parse_partition(std::string const& text) {
  Partition l;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    std::string part = text.substr(start, end - start);
    part.erase(0, part.find_first_not_of(" \t"));
    part.erase(part.find_last_not_of(" \t") + 1);
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorCode::invalid_partition, "bad partition '" + text + "'");
    }
    l.push_back(std::stoi(part));
    start = end + 1;
  }
  validate_partition(l);
  return l;
}

inline std::string partition_text(Partition const& l) {
  std::string s;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(l[i]);
  }
  return s;
}

// Partitions of n, largest first (reverse lexicographic).
inline std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int left, int max) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(left, max); k >= 1; --k) {
      cur.push_back(k);
      self(self, left - k, k);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

inline long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// f^lambda = n! / prod of hook lengths.
inline long long hook_length_dim(Partition const& l) {
  validate_partition(l);
  long long prod = 1;
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (int j = 0; j < l[i]; ++j) {
      int arm = l[i] - j - 1;
      int leg = 0;
      for (std::size_t k = i + 1; k < l.size() && l[k] > j; ++k) ++leg;
      prod *= arm + leg + 1;
    }
  }
  return factorial(partition_size(l)) / prod;
}

inline void validate_tableau(Partition const& l, Tableau const& t) {
  validate_partition(l);
  int n = partition_size(l);
  if (t.size() != l.size()) {
    throw Error(ErrorCode::invalid_tableau, "tableau shape does not match");
  }
  std::vector<bool> seen(n + 1, false);
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (int(t[i].size()) != l[i]) {
      throw Error(ErrorCode::invalid_tableau, "tableau shape does not match");
    }
    for (std::size_t j = 0; j < t[i].size(); ++j) {
      int v = t[i][j];
      if (v < 1 || v > n || seen[v]) {
        throw Error(ErrorCode::invalid_tableau, "entries must be 1..n, each once");
      }
      seen[v] = true;
      if (j && t[i][j - 1] >= v) {
        throw Error(ErrorCode::invalid_tableau, "rows must increase");
      }
      if (i && t[i - 1][j] >= v) {
        throw Error(ErrorCode::invalid_tableau, "columns must increase");
      }
    }
  }
}

// Rows filled with 1..n in reading order.
inline Tableau row_reading_tableau(Partition const& l) {
  validate_partition(l);
  Tableau t;
  int v = 1;
  for (int len : l) {
    t.emplace_back();
    for (int j = 0; j < len; ++j) t.back().push_back(v++);
  }
  return t;
}

inline std::vector<Tableau> standard_tableaux(Partition const& l) {
  validate_partition(l);
  int n = partition_size(l);
  std::vector<Tableau> out;
  Tableau cur(l.size());
  auto rec = [&](auto&& self, int v) -> void {
    if (v > n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = 0; i < l.size(); ++i) {
      int j = int(cur[i].size());
      if (j >= l[i]) continue;
      if (i && int(cur[i - 1].size()) <= j) continue;
      cur[i].push_back(v);
      self(self, v + 1);
      cur[i].pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

inline std::string tableau_text(Tableau const& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += "/";
    for (std::size_t j = 0; j < t[i].size(); ++j) {
      if (j) s += ",";
      s += std::to_string(t[i][j]);
    }
  }
  return s;
}

// "1,2/3" -> {{1,2},{3}}
inline Tableau parse_tableau(std::string const& text) {
  Tableau t(1);
  std::string cell;
  auto flush = [&] {
    if (cell.empty()) throw Error(ErrorCode::invalid_tableau, "bad tableau '" + text + "'");
    t.back().push_back(std::stoi(cell));
    cell.clear();
  };
  for (char c : text) {
    if (c == ' ') continue;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      cell += c;
    } else if (c == ',') {
      flush();
    } else if (c == '/') {
      flush();
      t.emplace_back();
    } else {
      throw Error(ErrorCode::invalid_tableau, "bad tableau '" + text + "'");
    }
  }
  flush();
  return t;
}

namespace detail {

// Permutations of 0..n-1 preserving each block (entries shifted to 0-based).
inline std::vector<Permutation> block_stabilizer(int n,
                                                 std::vector<std::vector<int>> const& blocks) {
  std::vector<int> block_of(n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int v : blocks[b]) block_of[v - 1] = int(b);
  }
  std::vector<Permutation> out;
  for (auto const& p : all_permutations(n)) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = block_of[i] == block_of[p(i)];
    if (ok) out.push_back(p);
  }
  return out;
}

}  // namespace detail

// e = (f^lambda / n!) a b with a the row symmetrizer and b the signed
// column antisymmetrizer of the tableau.
inline GroupAlgebraElem young_idempotent(Partition const& l, Tableau const& t) {
  validate_tableau(l, t);
  int n = partition_size(l);
  std::vector<std::vector<int>> cols(l.empty() ? 0 : l[0]);
  for (auto const& row : t) {
    for (std::size_t j = 0; j < row.size(); ++j) cols[j].push_back(row[j]);
  }
  GroupAlgebraElem a(n), b(n);
  for (auto const& p : detail::block_stabilizer(n, t)) a.add(p, 1);
  for (auto const& q : detail::block_stabilizer(n, cols)) b.add(q, q.sign());
  Rational c(static_cast<long>(hook_length_dim(l)), static_cast<long>(factorial(n)));
  c.canonicalize();
  return c * (a * b);
}

inline GroupAlgebraElem young_idempotent(Partition const& l) {
  return young_idempotent(l, row_reading_tableau(l));
}

// Matrix of x |-> x e on the regular representation, columns indexed by
// the permutations in lexicographic order.
inline Matrix right_multiplication_matrix(GroupAlgebraElem const& e) {
  auto perms = all_permutations(e.n());
  std::map<Permutation, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index.emplace(perms[i], i);
  Matrix m(perms.size(), perms.size());
  for (std::size_t j = 0; j < perms.size(); ++j) {
    for (auto const& [q, c] : e.terms()) m(index.at(perms[j] * q), j) += c;
  }
  return m;
}

// dim kS_n e.
inline std::size_t ideal_rank(GroupAlgebraElem const& e) {
  return right_multiplication_matrix(e).rank();
}

// pi (x) sigma in S_{m+n}.
inline Permutation juxtapose(Permutation const& p, Permutation const& q) {
  std::vector<int> v(p.images());
  for (int i = 0; i < q.size(); ++i) v.push_back(p.size() + q(i));
  return Permutation(std::move(v));
}

inline GroupAlgebraElem juxtapose(GroupAlgebraElem const& a, GroupAlgebraElem const& b) {
  GroupAlgebraElem r(a.n() + b.n());
  for (auto const& [p, c] : a.terms()) {
    for (auto const& [q, d] : b.terms()) r.add(juxtapose(p, q), c * d);
  }
  return r;
}

// rank of kS_{m+n} (e_lambda (x) e_mu).
inline std::size_t induced_product_dim(Partition const& l, Partition const& mu) {
  return ideal_rank(juxtapose(young_idempotent(l), young_idempotent(mu)));
}

// ----- Karoubi envelope -----

// Vect: objects are dimensions, morphisms matrices.
struct VectCategory {
  using Object = std::size_t;
  using Mor    = Matrix;

  Mor identity(Object x) const { return Matrix::identity(x); }
  Mor compose(Mor const& g, Mor const& f) const { return g * f; }
  bool equal(Mor const& a, Mor const& b) const { return a == b; }
  Object dom(Mor const& f) const { return f.cols(); }
  Object cod(Mor const& f) const { return f.rows(); }
  std::vector<Mor> hom_basis(Object x, Object y) const {
    std::vector<Mor> out;
    for (std::size_t i = 0; i < y; ++i) {
      for (std::size_t j = 0; j < x; ++j) {
        Matrix m(y, x);
        m(i, j) = 1;
        out.push_back(std::move(m));
      }
    }
    return out;
  }
  std::vector<Rational> coordinates(Mor const& f) const {
    std::vector<Rational> v;
    for (std::size_t i = 0; i < f.rows(); ++i) {
      for (std::size_t j = 0; j < f.cols(); ++j) v.push_back(f(i, j));
    }
    return v;
  }
};

// The symmetric category S: objects n (= ^ n times), End = kS_n.
struct SymCategory {
  using Object = int;
  using Mor    = GroupAlgebraElem;

  Mor identity(Object n) const { return GroupAlgebraElem::one(n); }
  Mor compose(Mor const& g, Mor const& f) const { return g * f; }
  bool equal(Mor const& a, Mor const& b) const { return a == b; }
  Object dom(Mor const& f) const { return f.n(); }
  Object cod(Mor const& f) const { return f.n(); }
  std::vector<Mor> hom_basis(Object x, Object y) const {
    std::vector<Mor> out;
    if (x != y) return out;
    for (auto const& p : all_permutations(x)) out.push_back(GroupAlgebraElem::basis(p));
    return out;
  }
  std::vector<Rational> coordinates(Mor const& f) const {
    std::vector<Rational> v;
    for (auto const& p : all_permutations(f.n())) v.push_back(f.coefficient(p));
    return v;
  }
};

template <class C>
struct KarObject {
  typename C::Object base;
  typename C::Mor idem;
};

// f : (X, e) -> (Y, e') with f = e' f e.
template <class C>
struct KarMorphism {
  KarObject<C> dom;
  KarObject<C> cod;
  typename C::Mor f;
};

template <class C>
class Karoubi {
 public:
  explicit Karoubi(C cat = {}) : cat_(std::move(cat)) {}

  C const& base() const { return cat_; }

  KarObject<C> object(typename C::Object x, typename C::Mor e) const {
    if (!cat_.equal(cat_.compose(e, e), e)) {
      throw Error(ErrorCode::not_idempotent, "e o e != e");
    }
    return {std::move(x), std::move(e)};
  }

  KarObject<C> embed(typename C::Object x) const {
    return {x, cat_.identity(x)};
  }

  KarMorphism<C> morphism(KarObject<C> const& dom, typename C::Mor f,
                          KarObject<C> const& cod) const {
    auto efe = cat_.compose(cod.idem, cat_.compose(f, dom.idem));
    if (!cat_.equal(efe, f)) {
      throw Error(ErrorCode::triple_condition, "f != e' o f o e");
    }
    return {dom, cod, std::move(f)};
  }

  KarMorphism<C> embed(typename C::Mor f) const {
    return morphism(embed(cat_.dom(f)), f, embed(cat_.cod(f)));
  }

  KarMorphism<C> identity(KarObject<C> const& x) const { return {x, x, x.idem}; }

  KarMorphism<C> compose(KarMorphism<C> const& g, KarMorphism<C> const& f) const {
    if (!cat_.equal(f.cod.idem, g.dom.idem)) {
      throw Error(ErrorCode::idempotent_mismatch,
                  "codomain idempotent of f differs from domain idempotent of g");
    }
    return morphism(f.dom, cat_.compose(g.f, f.f), g.cod);
  }

  // dim Hom((X,e), (Y,e')) = rank of f |-> e' f e on Hom(X, Y).
  std::size_t hom_dim(KarObject<C> const& x, KarObject<C> const& y) const {
    auto basis = cat_.hom_basis(x.base, y.base);
    if (basis.empty()) return 0;
    std::vector<std::vector<Rational>> cols;
    for (auto const& f : basis) {
      cols.push_back(cat_.coordinates(cat_.compose(y.idem, cat_.compose(f, x.idem))));
    }
    Matrix m(cols.front().size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      for (std::size_t i = 0; i < cols[j].size(); ++i) m(i, j) = cols[j][i];
    }
    return m.rank();
  }

 private:
  C cat_;
};

}  // namespace diacat

#endif  // DIACAT_DECAT_HPP_
