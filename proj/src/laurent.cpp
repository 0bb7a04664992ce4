#include "qlink/laurent.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "json.hpp"

namespace qlink {

bool GaussInt::is_unit() const {
  return (im == 0 && (re == 1 || re == -1)) || (re == 0 && (im == 1 || im == -1));
}

GaussInt GaussInt::div_exact(const GaussInt& d, bool& ok) const {
  // n/d = n * conj(d) / |d|^2, exact iff both components divide.
  BigInt norm = d.re * d.re + d.im * d.im;
  if (norm == 0) {
    ok = false;
    return GaussInt();
  }
  BigInt nre = re * d.re + im * d.im;
  BigInt nim = im * d.re - re * d.im;
  if (nre % norm != 0 || nim % norm != 0) {
    ok = false;
    return GaussInt();
  }
  ok = true;
  return {nre / norm, nim / norm};
}

Laurent Laurent::monomial(GaussInt c, int quarter_exp) {
  Laurent p;
  if (!c.is_zero()) p.terms_[quarter_exp] = std::move(c);
  return p;
}

Laurent Laurent::q_power(int num, int den) {
  if (den != 1 && den != 2 && den != 4) throw std::invalid_argument("q_power: bad denominator");
  return monomial(GaussInt(1), num * (4 / den));
}

int Laurent::top_exponent() const {
  if (terms_.empty()) throw std::logic_error("top_exponent of zero");
  return terms_.rbegin()->first;
}

int Laurent::bottom_exponent() const {
  if (terms_.empty()) throw std::logic_error("bottom_exponent of zero");
  return terms_.begin()->first;
}

void Laurent::add_term(int e, const GaussInt& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  r += o;
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
  Laurent r = *this;
  r -= o;
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

Laurent Laurent::inverse() const {
  if (terms_.size() != 1 || !terms_.begin()->second.is_unit())
    throw DivisionNotExact("inverse defined only for unit monomials");
  const auto& [e, c] = *terms_.begin();
  // conj of a unit is its inverse
  return monomial(GaussInt(c.re, -c.im), -e);
}

Laurent Laurent::invert_variable() const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

Laurent Laurent::pow(int k) const {
  Laurent base = k < 0 ? inverse() : *this;
  int n = k < 0 ? -k : k;
  Laurent acc = one();
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

std::complex<double> Laurent::eval(std::complex<double> x0) const {
  if (x0 == std::complex<double>(0.0, 0.0)) throw DivideByZero();
  std::complex<double> acc(0.0, 0.0);
  for (const auto& [e, c] : terms_) {
    std::complex<double> coeff(static_cast<double>(c.re), static_cast<double>(c.im));
    acc += coeff * std::pow(x0, std::complex<double>(e, 0.0));
  }
  return acc;
}

Laurent exact_div(const Laurent& p, const Laurent& r) {
  if (r.is_zero()) throw DivideByZero();
  if (p.is_zero()) return Laurent::zero();
  // Long division from the top exponent.  For an exact quotient u the
  // exponents of u lie in [bot(p)-bot(r), top(p)-top(r)], which bounds the
  // loop below.
  int min_quot = p.bottom_exponent() - r.bottom_exponent();
  const int rtop = r.top_exponent();
  const GaussInt& rlead = r.terms().rbegin()->second;
  Laurent rem = p;
  Laurent quot;
  while (!rem.is_zero()) {
    int tq = rem.top_exponent() - rtop;
    if (tq < min_quot) throw DivisionNotExact("nonzero remainder");
    bool ok = false;
    GaussInt tc = rem.terms().rbegin()->second.div_exact(rlead, ok);
    if (!ok) throw DivisionNotExact("leading coefficient not divisible");
    Laurent t = Laurent::monomial(tc, tq);
    quot += t;
    rem -= t * r;
  }
  return quot;
}

// ---------------------------------------------------------------------------
// text format: terms `[coeff][*]q^{p/den}` joined by +/-, den in {1,2,4}

namespace {

void render_coeff(std::ostringstream& out, const GaussInt& c, bool has_q, bool first) {
  GaussInt a = c;
  bool neg_printed = false;
  // pull a leading sign out of pure-real / pure-imaginary coefficients
  if ((a.im == 0 && a.re < 0) || (a.re == 0 && a.im < 0)) {
    out << (first ? "-" : " - ");
    a = -a;
    neg_printed = true;
  }
  if (!neg_printed) out << (first ? "" : " + ");

  if (a.im == 0) {
    if (a.re == 1) {
      if (!has_q) out << "1";
    } else {
      out << a.re.str();
      if (has_q) out << "*";
    }
  } else if (a.re == 0) {
    if (a.im == 1)
      out << "i";
    else
      out << a.im.str() << "i";
    if (has_q) out << "*";
  } else {
    out << "(" << a.re.str() << (a.im < 0 ? "-" : "+");
    BigInt b = a.im < 0 ? BigInt(-a.im) : a.im;
    if (b != 1) out << b.str();
    out << "i)";
    if (has_q) out << "*";
  }
}

void render_qpart(std::ostringstream& out, int e) {
  if (e == 0) return;
  if (e == 4) {
    out << "q";
    return;
  }
  out << "q^{";
  if (e % 4 == 0)
    out << e / 4;
  else if (e % 2 == 0)
    out << e / 2 << "/2";
  else
    out << e << "/4";
  out << "}";
}

struct Cursor {
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", i);
  }
  BigInt integer() {
    skip_ws();
    size_t start = i;
    bool neg = accept('-');
    skip_ws();
    size_t d0 = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == d0) throw ParseError("expected integer", start);
    BigInt v(s.substr(d0, i - d0));
    return neg ? BigInt(-v) : v;
  }
};

// one term: coefficient (optional) and q-part (optional), at least one present
Laurent parse_term(Cursor& cur) {
  GaussInt coeff(1);
  bool have_coeff = false;

  char c = cur.peek();
  if (c == '(') {
    cur.expect('(');
    BigInt re = cur.integer();
    cur.skip_ws();
    if (cur.i >= cur.s.size() || (cur.s[cur.i] != '+' && cur.s[cur.i] != '-'))
      throw ParseError("expected sign in complex coefficient", cur.i);
    bool neg = cur.s[cur.i] == '-';
    ++cur.i;
    BigInt im(1);
    cur.skip_ws();
    if (cur.i < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.i])))
      im = cur.integer();
    if (!cur.accept('i')) throw ParseError("expected 'i'", cur.i);
    cur.expect(')');
    coeff = GaussInt(re, neg ? BigInt(-im) : im);
    have_coeff = true;
  } else if (c == 'i') {
    ++cur.i;
    coeff = GaussInt(BigInt(0), BigInt(1));
    have_coeff = true;
  } else if (std::isdigit(static_cast<unsigned char>(c))) {
    BigInt v = cur.integer();
    if (cur.peek() == 'i') {
      ++cur.i;
      coeff = GaussInt(BigInt(0), v);
    } else {
      coeff = GaussInt(v, BigInt(0));
    }
    have_coeff = true;
  }

  if (have_coeff) cur.accept('*');

  int e = 0;
  if (cur.peek() == 'q') {
    ++cur.i;
    if (cur.accept('^')) {
      cur.expect('{');
      BigInt num = cur.integer();
      long den = 1;
      if (cur.accept('/')) {
        BigInt d = cur.integer();
        if (d != 1 && d != 2 && d != 4) throw ParseError("exponent denominator must be 1, 2 or 4", cur.i);
        den = static_cast<long>(d);
      }
      cur.expect('}');
      BigInt quarters = num * (4 / den);
      if (quarters > 1000000 || quarters < -1000000) throw ParseError("exponent out of range", cur.i);
      e = static_cast<int>(quarters);
    } else {
      e = 4;
    }
  } else if (!have_coeff) {
    throw ParseError("expected term", cur.i);
  }
  return Laurent::monomial(coeff, e);
}

}  // namespace

std::string Laurent::render() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    render_coeff(out, it->second, it->first != 0, first);
    render_qpart(out, it->first);
    first = false;
  }
  return out.str();
}

Laurent Laurent::parse(const std::string& text) {
  Cursor cur{text};
  Laurent acc;
  bool negate = cur.accept('-');
  while (true) {
    Laurent t = parse_term(cur);
    acc += negate ? -t : t;
    if (cur.eof()) break;
    if (cur.accept('+'))
      negate = false;
    else if (cur.accept('-'))
      negate = true;
    else
      throw ParseError("expected '+' or '-'", cur.i);
  }
  return acc;
}

// JSON form: {"den":4,"terms":[[e,re,im],...]} sorted ascending by e.
// Coefficients that do not fit in 64 bits are emitted as decimal strings.

std::string Laurent::to_json() const {
  std::ostringstream out;
  out << "{\"den\":4,\"terms\":[";
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << ",";
    first = false;
    auto emit = [&out](const BigInt& v) {
      if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        out << v.str();
      else
        out << '"' << v.str() << '"';
    };
    out << "[" << e << ",";
    emit(c.re);
    out << ",";
    emit(c.im);
    out << "]";
  }
  out << "]}";
  return out.str();
}

Laurent Laurent::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("bad json: ") + e.what(), e.byte);
  }
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw ParseError("expected {\"den\":4,\"terms\":[...]}", 0);
  if (j.contains("den") && j["den"] != 4) throw ParseError("den must be 4", 0);
  auto to_big = [](const nlohmann::json& v) -> BigInt {
    if (v.is_string()) return BigInt(v.get<std::string>());
    if (v.is_number_integer()) return BigInt(v.get<long long>());
    throw ParseError("coefficient must be integer or string", 0);
  };
  Laurent acc;
  for (const auto& t : j["terms"]) {
    if (!t.is_array() || t.size() != 3) throw ParseError("term must be [e,re,im]", 0);
    if (!t[0].is_number_integer()) throw ParseError("exponent must be integer", 0);
    acc += monomial(GaussInt(to_big(t[1]), to_big(t[2])), t[0].get<int>());
  }
  return acc;
}

}  // namespace qlink
