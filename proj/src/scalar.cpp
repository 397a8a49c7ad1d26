#include "qg/scalar.hpp"

#include "qg/errors.hpp"

namespace qg {

Scalar parse_scalar(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::InvalidArgument, "empty rational");
  Scalar s;
  if (s.set_str(text, 10) != 0) throw Error(ErrorCode::InvalidArgument, "bad rational '" + text + "'");
  if (s.get_den() == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator in '" + text + "'");
  s.canonicalize();
  return s;
}

std::string to_string(const Scalar& s) {
  return s.get_num().get_str() + "/" + s.get_den().get_str();
}

std::string to_display(const Scalar& s) {
  if (s.get_den() == 1) return s.get_num().get_str();
  return s.get_str();
}

std::optional<Scalar> rational_sqrt(const Scalar& s) {
  if (sgn(s) < 0) return std::nullopt;
  mpz_class n = s.get_num(), d = s.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  Scalar r(rn, rd);
  r.canonicalize();
  return r;
}

}  // namespace qg
