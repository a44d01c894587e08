#include "grasshilb/rational.hpp"

#include <cctype>
#include <limits>

#include "grasshilb/error.hpp"

namespace grasshilb {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::WrongPartCount: return "wrong-part-count";
    case ErrorKind::NotWeaklyDecreasing: return "not-weakly-decreasing";
    case ErrorKind::PartExceedsWidth: return "part-exceeds-width";
    case ErrorKind::NegativePart: return "negative-part";
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::BoundTooSmall: return "bound-too-small";
    case ErrorKind::NonMaximalClass: return "non-maximal-class";
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::RankDeficient: return "rank-deficient";
    case ErrorKind::NotOnGrassmannian: return "not-on-grassmannian";
    case ErrorKind::UnclassifiablePlane: return "unclassifiable-plane";
    case ErrorKind::NotSquarefree: return "not-squarefree";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Rational parse_rational(std::string_view text) {
  auto begin = text.find_first_not_of(" \t\r\n");
  auto end = text.find_last_not_of(" \t\r\n");
  if (begin == std::string_view::npos) {
    throw Error(ErrorKind::Parse, "empty rational");
  }
  std::string body(text.substr(begin, end - begin + 1));
  if (!body.empty() && body.front() == '+') body.erase(body.begin());

  // GMP accepts some forms we do not want (e.g. "0x10"), so check the shape.
  std::size_t i = 0;
  if (i < body.size() && body[i] == '-') ++i;
  std::size_t digits = 0;
  while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) ++i, ++digits;
  if (digits == 0) throw Error(ErrorKind::Parse, "malformed rational '" + body + "'");
  if (i < body.size()) {
    if (body[i] != '/') throw Error(ErrorKind::Parse, "malformed rational '" + body + "'");
    ++i;
    std::size_t den_digits = 0;
    while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) ++i, ++den_digits;
    if (den_digits == 0 || i != body.size()) {
      throw Error(ErrorKind::Parse, "malformed rational '" + body + "'");
    }
  }

  Rational q;
  if (q.set_str(body, 10) != 0) {
    throw Error(ErrorKind::Parse, "malformed rational '" + body + "'");
  }
  if (sgn(q.get_den()) == 0) {
    throw Error(ErrorKind::Parse, "zero denominator in '" + body + "'");
  }
  q.canonicalize();
  return q;
}

Integer binomial(std::int64_t top, std::int64_t bottom) {
  if (top < 0 || bottom < 0 || bottom > top) return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(top),
               static_cast<unsigned long>(bottom));
  return result;
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) {
    throw Error(ErrorKind::InvalidParameter, "integer out of range: " + z.get_str());
  }
  return z.get_si();
}

}  // namespace grasshilb
