#include "holonomic/poly/bipoly.hpp"

#include <algorithm>
#include <cctype>

#include "holonomic/errors.hpp"
#include "holonomic/poly/kronecker.hpp"

namespace holo {

BiPoly::BiPoly(const std::vector<std::vector<BigInt>>& rows) {
  size_t nk = 0;
  for (const auto& r : rows) nk = std::max(nk, r.size());
  *this = BiPoly(rows.size(), nk);
  for (size_t a = 0; a < rows.size(); ++a) {
    for (size_t b = 0; b < rows[a].size(); ++b) at(a, b) = rows[a][b];
  }
  trim();
}

BiPoly BiPoly::constant(const BigInt& c) { return BiPoly({{c}}); }
BiPoly BiPoly::x() { return BiPoly({{BigInt(0)}, {BigInt(1)}}); }
BiPoly BiPoly::k() { return BiPoly({{BigInt(0), BigInt(1)}}); }

BiPoly BiPoly::from_x_poly(const ZPoly& p) {
  BiPoly r(p.length(), p.is_zero() ? 0 : 1);
  for (size_t a = 0; a < p.length(); ++a) r.at(a, 0) = p[a];
  r.trim();
  return r;
}

BiPoly BiPoly::from_k_poly(const ZPoly& p) {
  BiPoly r(p.is_zero() ? 0 : 1, p.length());
  for (size_t b = 0; b < p.length(); ++b) r.at(0, b) = p[b];
  r.trim();
  return r;
}

void BiPoly::trim() {
  size_t nx = 0;
  size_t nk = 0;
  for (size_t a = 0; a < nx_; ++a) {
    for (size_t b = 0; b < nk_; ++b) {
      if (sgn(at(a, b)) != 0) {
        nx = std::max(nx, a + 1);
        nk = std::max(nk, b + 1);
      }
    }
  }
  if (nx == nx_ && nk == nk_) return;
  std::vector<BigInt> c(nx * nk);
  for (size_t a = 0; a < nx; ++a) {
    for (size_t b = 0; b < nk; ++b) c[a * nk + b] = std::move(at(a, b));
  }
  nx_ = nx;
  nk_ = nk;
  c_ = std::move(c);
}

size_t BiPoly::term_count() const {
  return static_cast<size_t>(std::count_if(c_.begin(), c_.end(), [](const BigInt& v) { return sgn(v) != 0; }));
}

const BigInt& BiPoly::coeff(size_t a, size_t b) const {
  static const BigInt kZero(0);
  if (a >= nx_ || b >= nk_) return kZero;
  return at(a, b);
}

void BiPoly::set_coeff(size_t a, size_t b, const BigInt& v) {
  if (a >= nx_ || b >= nk_) {
    if (sgn(v) == 0) return;
    BiPoly grown(std::max(nx_, a + 1), std::max(nk_, b + 1));
    for (size_t i = 0; i < nx_; ++i) {
      for (size_t j = 0; j < nk_; ++j) grown.at(i, j) = std::move(at(i, j));
    }
    *this = std::move(grown);
  }
  at(a, b) = v;
  trim();
}

ZPoly BiPoly::eval_k(const BigInt& k0) const {
  std::vector<BigInt> out(nx_);
  for (size_t a = 0; a < nx_; ++a) {
    BigInt acc = 0;
    for (size_t b = nk_; b-- > 0;) acc = acc * k0 + at(a, b);
    out[a] = std::move(acc);
  }
  return ZPoly(std::move(out));
}

ZPoly BiPoly::eval_x(const BigInt& x0) const {
  std::vector<BigInt> out(nk_);
  for (size_t b = 0; b < nk_; ++b) {
    BigInt acc = 0;
    for (size_t a = nx_; a-- > 0;) acc = acc * x0 + at(a, b);
    out[b] = std::move(acc);
  }
  return ZPoly(std::move(out));
}

BigInt BiPoly::eval(const BigInt& x0, const BigInt& k0) const { return horner(eval_k(k0), x0); }

BigRational BiPoly::eval(const BigRational& x0, const BigRational& k0) const {
  BigRational acc = 0;
  for (size_t a = nx_; a-- > 0;) {
    BigRational row = 0;
    for (size_t b = nk_; b-- > 0;) row = row * k0 + BigRational(at(a, b));
    acc = acc * x0 + row;
  }
  return acc;
}

ZPoly BiPoly::x_row(size_t a) const {
  if (a >= nx_) return {};
  return ZPoly(std::vector<BigInt>(c_.begin() + static_cast<long>(a * nk_), c_.begin() + static_cast<long>((a + 1) * nk_)));
}

ZPoly BiPoly::k_column(size_t b) const {
  if (b >= nk_) return {};
  std::vector<BigInt> out(nx_);
  for (size_t a = 0; a < nx_; ++a) out[a] = at(a, b);
  return ZPoly(std::move(out));
}

BiPoly BiPoly::shift_k(const BigInt& c) const {
  if (sgn(c) == 0) return *this;
  BiPoly r = *this;
  for (size_t a = 0; a < nx_; ++a) {
    ZPoly row = taylor_shift(x_row(a), c);
    for (size_t b = 0; b < nk_; ++b) r.at(a, b) = row.coeff(b);
  }
  r.trim();
  return r;
}

BiPoly BiPoly::shift_x(const BigInt& c) const {
  if (sgn(c) == 0) return *this;
  BiPoly r = *this;
  for (size_t b = 0; b < nk_; ++b) {
    ZPoly col = taylor_shift(k_column(b), c);
    for (size_t a = 0; a < nx_; ++a) r.at(a, b) = col.coeff(a);
  }
  r.trim();
  return r;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly r(std::max(a.nx_, b.nx_), std::max(a.nk_, b.nk_));
  for (size_t i = 0; i < a.nx_; ++i) {
    for (size_t j = 0; j < a.nk_; ++j) r.at(i, j) = a.at(i, j);
  }
  for (size_t i = 0; i < b.nx_; ++i) {
    for (size_t j = 0; j < b.nk_; ++j) r.at(i, j) += b.at(i, j);
  }
  r.trim();
  return r;
}

BiPoly operator-(const BiPoly& a) {
  BiPoly r = a;
  for (auto& v : r.c_) v = -v;
  return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  size_t nx = a.nx_ + b.nx_ - 1;
  size_t nk = a.nk_ + b.nk_ - 1;
  BiPoly r(nx, nk);
  if (a.term_count() <= 4 || b.term_count() <= 4) {
    for (size_t i = 0; i < a.nx_; ++i) {
      for (size_t j = 0; j < a.nk_; ++j) {
        if (sgn(a.at(i, j)) == 0) continue;
        for (size_t u = 0; u < b.nx_; ++u) {
          for (size_t v = 0; v < b.nk_; ++v) {
            if (sgn(b.at(u, v)) != 0) r.at(i + u, j + v) += a.at(i, j) * b.at(u, v);
          }
        }
      }
    }
    r.trim();
    return r;
  }
  // x^i k^j -> t^(i*nk + j); no carries between rows since j < nk.
  auto flatten = [nk](const BiPoly& p) {
    std::vector<BigInt> f((p.nx_ - 1) * nk + p.nk_);
    for (size_t i = 0; i < p.nx_; ++i) {
      for (size_t j = 0; j < p.nk_; ++j) f[i * nk + j] = p.at(i, j);
    }
    return f;
  };
  std::vector<BigInt> prod = kronecker_product(flatten(a), flatten(b));
  for (size_t t = 0; t < prod.size(); ++t) r.at(t / nk, t % nk) = std::move(prod[t]);
  r.trim();
  return r;
}

bool operator==(const BiPoly& a, const BiPoly& b) {
  return a.nx_ == b.nx_ && a.nk_ == b.nk_ && a.c_ == b.c_;
}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
    }
  }

  BiPoly parse() {
    if (s_.empty()) fail("empty polynomial");
    BiPoly acc;
    bool first = true;
    while (pos_ < s_.size()) {
      bool negative = false;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        negative = s_[pos_] == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      acc = acc + term(negative);
    }
    return acc;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at column " + std::to_string(pos_ + 1) + " in '" + s_ + "'", 0);
  }

  unsigned long exponent() {
    if (pos_ >= s_.size() || s_[pos_] != '^') return 1;
    ++pos_;
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 6) fail("bad exponent");
    return std::stoul(s_.substr(start, pos_ - start));
  }

  BiPoly term(bool negative) {
    BigInt coeff = 1;
    unsigned long ex = 0;
    unsigned long ek = 0;
    bool any = false;
    while (true) {
      if (pos_ >= s_.size()) fail("expected a factor");
      char c = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        coeff *= BigInt(s_.substr(start, pos_ - start), 10);
      } else if (c == 'x') {
        ++pos_;
        ex += exponent();
      } else if (c == 'k') {
        ++pos_;
        ek += exponent();
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      any = true;
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    if (pos_ < s_.size() && s_[pos_] != '+' && s_[pos_] != '-') fail("unexpected character");
    BiPoly t;
    t.set_coeff(ex, ek, negative ? BigInt(-coeff) : coeff);
    return t;
  }

  std::string s_;
  size_t pos_ = 0;
};

}  // namespace

BiPoly BiPoly::parse(std::string_view text) { return TermParser(text).parse(); }

std::string BiPoly::to_string() const {
  std::string out;
  for (size_t a = 0; a < nx_; ++a) {
    for (size_t b = 0; b < nk_; ++b) {
      const BigInt& v = at(a, b);
      if (sgn(v) == 0) continue;
      if (out.empty()) {
        if (sgn(v) < 0) out += "-";
      } else {
        out += sgn(v) < 0 ? " - " : " + ";
      }
      out += BigInt(abs(v)).get_str();
      if (a >= 1) out += a == 1 ? "*x" : "*x^" + std::to_string(a);
      if (b >= 1) out += b == 1 ? "*k" : "*k^" + std::to_string(b);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace holo
