#include "unitarea/poly.hpp"

#include <algorithm>
#include <sstream>

#include "unitarea/error.hpp"

namespace unitarea {

// ---- UPoly -----------------------------------------------------------------

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }

UPoly UPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational UPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  if (coeffs_.size() <= 1) return UPoly();
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  const Rational inv = 1 / leading();
  return inv * *this;
}

UPoly UPoly::primitive() const {
  if (is_zero()) return *this;
  Integer l = 1;
  for (const Rational& c : coeffs_) l = lcm(l, c.get_den());
  Integer g = 0;
  for (const Rational& c : coeffs_) g = gcd(g, Integer(c * l));
  std::vector<Rational> out;
  out.reserve(coeffs_.size());
  const Rational scale = make_rational(l, g) * (sgn(leading()) < 0 ? -1 : 1);
  for (const Rational& c : coeffs_) out.push_back(c * scale);
  return UPoly(std::move(out));
}

UPoly operator+(const UPoly& p, const UPoly& q) {
  std::vector<Rational> r(std::max(p.coeffs_.size(), q.coeffs_.size()));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) r[i] += p.coeffs_[i];
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) r[i] += q.coeffs_[i];
  return UPoly(std::move(r));
}

UPoly operator-(const UPoly& p) {
  std::vector<Rational> r = p.coeffs_;
  for (auto& c : r) c = -c;
  return UPoly(std::move(r));
}

UPoly operator-(const UPoly& p, const UPoly& q) { return p + (-q); }

UPoly operator*(const UPoly& p, const UPoly& q) {
  if (p.is_zero() || q.is_zero()) return UPoly();
  std::vector<Rational> r(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (sgn(p.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) r[i + j] += p.coeffs_[i] * q.coeffs_[j];
  }
  return UPoly(std::move(r));
}

UPoly operator*(const Rational& c, const UPoly& p) {
  std::vector<Rational> r = p.coeffs_;
  for (auto& v : r) v *= c;
  return UPoly(std::move(r));
}

std::pair<UPoly, UPoly> divmod(const UPoly& p, const UPoly& d) {
  if (d.is_zero()) throw Error(Errc::InvalidArgument, "polynomial division by zero");
  std::vector<Rational> rem = p.coeffs();
  const int dd = d.degree();
  if (p.degree() < dd) return {UPoly(), p};
  std::vector<Rational> quo(static_cast<std::size_t>(p.degree() - dd + 1));
  const Rational inv = 1 / d.leading();
  for (int i = p.degree(); i >= dd; --i) {
    const Rational f = rem[static_cast<std::size_t>(i)] * inv;
    quo[static_cast<std::size_t>(i - dd)] = f;
    if (sgn(f) == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= f * d.coeff(static_cast<std::size_t>(j));
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly gcd(const UPoly& p, const UPoly& q) {
  UPoly a = p;
  UPoly b = q;
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = r.primitive();  // keeps coefficient growth in check
  }
  return a.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p.monic();
  const UPoly g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

std::vector<UPoly> squarefree_decomposition(const UPoly& p) {
  std::vector<UPoly> parts;
  if (p.degree() <= 0) return parts;
  UPoly a = p.monic();
  UPoly b = gcd(a, a.derivative());
  UPoly c = divmod(a, b).first;
  UPoly d = divmod(a.derivative(), b).first - c.derivative();
  while (c.degree() > 0) {
    UPoly part = gcd(c, d);
    parts.push_back(part);
    c = divmod(c, part).first;
    d = divmod(d, part).first - c.derivative();
  }
  return parts;
}

namespace {

// Primitive integer multiple by a positive factor (sign kept).
UPoly positive_rescale(const UPoly& q) {
  if (q.is_zero()) return q;
  UPoly prim = q.primitive();
  return sgn(prim.leading()) == sgn(q.leading()) ? prim : -prim;
}

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  std::vector<UPoly> seq{positive_rescale(p), positive_rescale(p.derivative())};
  while (!seq.back().is_zero()) {
    UPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(positive_rescale(-r));
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

int variations(const std::vector<int>& signs) {
  int v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int variations_at(const std::vector<UPoly>& seq, const Rational& t) {
  std::vector<int> s;
  s.reserve(seq.size());
  for (const UPoly& q : seq) s.push_back(sgn(q(t)));
  return variations(s);
}

int variations_at_infinity(const std::vector<UPoly>& seq, bool positive) {
  std::vector<int> s;
  for (const UPoly& q : seq) {
    int sg = sgn(q.leading());
    if (!positive && q.degree() % 2 == 1) sg = -sg;
    s.push_back(sg);
  }
  return variations(s);
}

Rational cauchy_bound(const UPoly& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coeff(static_cast<std::size_t>(i)) / p.leading());
    if (r > m) m = r;
  }
  return m + 1;
}

}  // namespace

std::size_t count_real_roots(const UPoly& p) {
  if (p.degree() <= 0) return 0;
  const auto seq = sturm_sequence(squarefree_part(p));
  return static_cast<std::size_t>(variations_at_infinity(seq, false) - variations_at_infinity(seq, true));
}

std::size_t count_real_roots(const UPoly& p, const Rational& lo, const Rational& hi) {
  if (p.degree() <= 0 || !(lo < hi)) return 0;
  const auto seq = sturm_sequence(squarefree_part(p));
  return static_cast<std::size_t>(variations_at(seq, lo) - variations_at(seq, hi));
}

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
  if (hi < lo) return simplest_rational_between(hi, lo);
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return Rational(0);
  if (sgn(hi) < 0) return -simplest_rational_between(-hi, -lo);
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  // lo, hi both strictly inside (fl, fl + 1).
  const Rational inner = simplest_rational_between(1 / (hi - fl), 1 / (lo - fl));
  Rational r = Rational(fl) + 1 / inner;
  return r;
}

std::vector<Rational> rational_roots(const UPoly& p) {
  std::vector<Rational> roots;
  if (p.degree() <= 0) return roots;
  const UPoly q = squarefree_part(p).primitive();
  if (q.degree() == 1) {
    roots.push_back(-q.coeff(0) / q.coeff(1));
    return roots;
  }
  const auto seq = sturm_sequence(q);
  const Integer lc = abs(q.leading().get_num());
  // Distinct fractions with denominators <= lc are at least 1/lc² apart.
  const Rational resolution = make_rational(1, lc * lc);
  const Rational bound = cauchy_bound(q);

  struct Interval {
    Rational lo, hi;
    int vlo, vhi;
  };
  std::vector<Interval> pending{{-bound, bound, variations_at(seq, -bound), variations_at(seq, bound)}};
  std::vector<Interval> isolated;
  while (!pending.empty()) {
    Interval iv = std::move(pending.back());
    pending.pop_back();
    const int count = iv.vlo - iv.vhi;
    if (count == 0) continue;
    if (count == 1) {
      isolated.push_back(std::move(iv));
      continue;
    }
    Rational mid = (iv.lo + iv.hi) / 2;
    const int vmid = variations_at(seq, mid);
    pending.push_back({iv.lo, mid, iv.vlo, vmid});
    pending.push_back({mid, iv.hi, vmid, iv.vhi});
  }

  for (Interval& iv : isolated) {
    // Exactly one root in (lo, hi].
    if (sgn(q(iv.hi)) == 0) {
      roots.push_back(iv.hi);
      continue;
    }
    bool found = false;
    while (iv.hi - iv.lo >= resolution) {
      Rational mid = (iv.lo + iv.hi) / 2;
      const int smid = sgn(q(mid));
      if (smid == 0) {
        roots.push_back(mid);
        found = true;
        break;
      }
      const int slo = sgn(q(iv.lo));
      bool left;
      if (slo != 0) {
        left = slo != smid;
      } else {
        left = variations_at(seq, iv.lo) - variations_at(seq, mid) == 1;
      }
      (left ? iv.hi : iv.lo) = mid;
    }
    if (found) continue;
    Rational cand = simplest_rational_between(iv.lo, iv.hi);
    if (iv.lo < cand && cand <= iv.hi && sgn(q(cand)) == 0) roots.push_back(cand);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::size_t root_multiplicity(const UPoly& p, const Rational& r) {
  if (p.is_zero()) return 0;
  std::size_t m = 0;
  UPoly cur = p;
  const UPoly factor(std::vector<Rational>{-r, Rational(1)});
  while (cur.degree() >= 1) {
    auto [quo, rem] = divmod(cur, factor);
    if (!rem.is_zero()) break;
    cur = std::move(quo);
    ++m;
  }
  return m;
}

// ---- Poly2 -----------------------------------------------------------------

Poly2 Poly2::constant(const Rational& c) {
  Poly2 p;
  p.set(0, 0, c);
  return p;
}

Poly2 Poly2::x() {
  Poly2 p;
  p.set(1, 0, Rational(1));
  return p;
}

Poly2 Poly2::y() {
  Poly2 p;
  p.set(0, 1, Rational(1));
  return p;
}

Poly2 Poly2::linear(const Rational& a, const Rational& b, const Rational& c) {
  Poly2 p;
  p.set(1, 0, a);
  p.set(0, 1, b);
  p.set(0, 0, c);
  return p;
}

Rational Poly2::coeff(std::size_t i, std::size_t j) const {
  if (i >= terms_.size() || j >= terms_[i].size()) return Rational(0);
  return terms_[i][j];
}

void Poly2::set(std::size_t i, std::size_t j, const Rational& v) {
  if (i >= terms_.size()) terms_.resize(i + 1);
  if (j >= terms_[i].size()) terms_[i].resize(j + 1);
  terms_[i][j] = v;
  trim();
}

void Poly2::add_to(std::size_t i, std::size_t j, const Rational& v) {
  if (sgn(v) == 0) return;
  if (i >= terms_.size()) terms_.resize(i + 1);
  if (j >= terms_[i].size()) terms_[i].resize(j + 1);
  terms_[i][j] += v;
  trim();
}

void Poly2::trim() {
  for (auto& row : terms_) {
    while (!row.empty() && sgn(row.back()) == 0) row.pop_back();
  }
  while (!terms_.empty() && terms_.back().empty()) terms_.pop_back();
}

bool Poly2::is_zero() const { return terms_.empty(); }

int Poly2::degree() const {
  int d = -1;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    for (std::size_t j = 0; j < terms_[i].size(); ++j) {
      if (sgn(terms_[i][j]) != 0) d = std::max(d, static_cast<int>(i + j));
    }
  }
  return d;
}

int Poly2::degree_in_y() const {
  int d = -1;
  for (const auto& row : terms_) d = std::max(d, static_cast<int>(row.size()) - 1);
  return d;
}

Poly2 Poly2::homogeneous(int d) const {
  Poly2 h;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    for (std::size_t j = 0; j < terms_[i].size(); ++j) {
      if (static_cast<int>(i + j) == d && sgn(terms_[i][j]) != 0) h.set(i, j, terms_[i][j]);
    }
  }
  return h;
}

Rational Poly2::operator()(const Rational& x, const Rational& y) const {
  Rational acc = 0;
  for (auto i = terms_.size(); i-- > 0;) {
    Rational row = 0;
    for (auto j = terms_[i].size(); j-- > 0;) row = row * y + terms_[i][j];
    acc = acc * x + row;
  }
  return acc;
}

Poly2 operator+(const Poly2& p, const Poly2& q) {
  Poly2 r = p;
  for (std::size_t i = 0; i < q.terms_.size(); ++i) {
    for (std::size_t j = 0; j < q.terms_[i].size(); ++j) r.add_to(i, j, q.terms_[i][j]);
  }
  return r;
}

Poly2 operator-(const Poly2& p, const Poly2& q) { return p + Rational(-1) * q; }

Poly2 operator*(const Rational& c, const Poly2& p) {
  Poly2 r;
  if (sgn(c) == 0) return r;
  r.terms_ = p.terms_;
  for (auto& row : r.terms_) {
    for (auto& v : row) v *= c;
  }
  return r;
}

Poly2 operator*(const Poly2& p, const Poly2& q) {
  Poly2 r;
  if (p.is_zero() || q.is_zero()) return r;
  std::size_t rows = p.terms_.size() + q.terms_.size() - 1;
  std::size_t cols = 0;
  for (const auto& a : p.terms_) {
    for (const auto& b : q.terms_) cols = std::max(cols, a.size() + b.size());
  }
  r.terms_.assign(rows, std::vector<Rational>(cols));
  for (std::size_t i = 0; i < p.terms_.size(); ++i) {
    for (std::size_t j = 0; j < p.terms_[i].size(); ++j) {
      if (sgn(p.terms_[i][j]) == 0) continue;
      for (std::size_t k = 0; k < q.terms_.size(); ++k) {
        for (std::size_t l = 0; l < q.terms_[k].size(); ++l) {
          r.terms_[i + k][j + l] += p.terms_[i][j] * q.terms_[k][l];
        }
      }
    }
  }
  r.trim();
  return r;
}

bool operator==(const Poly2& p, const Poly2& q) { return p.terms_ == q.terms_; }

Poly2 pow(const Poly2& p, unsigned e) {
  Poly2 r = Poly2::constant(Rational(1));
  for (unsigned i = 0; i < e; ++i) r = r * p;
  return r;
}

Poly2 Poly2::substitute(const Poly2& x_image, const Poly2& y_image) const {
  Poly2 out;
  if (is_zero()) return out;
  std::vector<Poly2> xp{Poly2::constant(Rational(1))};
  std::vector<Poly2> yp{Poly2::constant(Rational(1))};
  std::size_t max_j = 0;
  for (const auto& row : terms_) max_j = std::max(max_j, row.size());
  for (std::size_t i = 1; i < terms_.size(); ++i) xp.push_back(xp.back() * x_image);
  for (std::size_t j = 1; j < max_j; ++j) yp.push_back(yp.back() * y_image);
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    for (std::size_t j = 0; j < terms_[i].size(); ++j) {
      if (sgn(terms_[i][j]) == 0) continue;
      out = out + terms_[i][j] * (xp[i] * yp[j]);
    }
  }
  return out;
}

UPoly Poly2::restrict_to_line(const Point& p0, const Rational& dx, const Rational& dy) const {
  // Substitute into the x variable only, so the result lives in row 0..deg.
  const Poly2 sub = substitute(Poly2::linear(dx, Rational(0), p0.x), Poly2::linear(dy, Rational(0), p0.y));
  std::vector<Rational> c(sub.terms_.size());
  for (std::size_t i = 0; i < sub.terms_.size(); ++i) c[i] = sub.coeff(i, 0);
  return UPoly(std::move(c));
}

std::vector<UPoly> Poly2::coefficients_in_y() const {
  const int dy = degree_in_y();
  std::vector<UPoly> out;
  for (int j = 0; j <= dy; ++j) {
    std::vector<Rational> c(terms_.size());
    for (std::size_t i = 0; i < terms_.size(); ++i) c[i] = coeff(i, static_cast<std::size_t>(j));
    out.emplace_back(std::move(c));
  }
  return out;
}

std::string Poly2::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    for (int i = d; i >= 0; --i) {
      const Rational c = coeff(static_cast<std::size_t>(i), static_cast<std::size_t>(d - i));
      if (sgn(c) == 0) continue;
      os << (first ? "" : " + ") << "(" << c.get_str() << ")";
      if (i > 0) os << "*x^" << i;
      if (d - i > 0) os << "*y^" << (d - i);
      first = false;
    }
  }
  if (first) os << "0";
  return os.str();
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const Rational inv = 1 / m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(m[r][col]) == 0) continue;
      const Rational f = m[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

}  // namespace unitarea
