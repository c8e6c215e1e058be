#include "pseudoarc/rational.hpp"

#include "pseudoarc/errors.hpp"

namespace pseudoarc {

std::string qstr(const Q& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Q parse_q(const std::string& s) {
  if (s.empty()) throw Error("ParseError", "empty rational");
  auto ok = [](const std::string& t) {
    if (t.empty()) return false;
    size_t k = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (k == t.size()) return false;
    for (; k < t.size(); ++k)
      if (t[k] < '0' || t[k] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string a = s.substr(0, slash);
  std::string b = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!ok(a) || !ok(b)) throw Error("ParseError", "bad rational '" + s + "'");
  if (a[0] == '+') a = a.substr(1);
  if (b[0] == '+') b = b.substr(1);
  Z num(a), den(b);
  if (den == 0) throw Error("ParseError", "zero denominator in '" + s + "'");
  Q q(num, den);
  q.canonicalize();
  return q;
}

Q frac(const Z& a, const Z& b) {
  if (b == 0) throw Error("RangeViolation", "zero denominator");
  Q q(a, b);
  q.canonicalize();
  return q;
}

Q qabs(const Q& q) { return q < 0 ? Q(-q) : q; }
Q qmin(const Q& a, const Q& b) { return a < b ? a : b; }
Q qmax(const Q& a, const Q& b) { return a < b ? b : a; }

Z floor_q(const Q& q) {
  Z r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Z ceil_q(const Q& q) {
  Z r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace pseudoarc
