#include "hptau/scalar.hpp"

#include <cctype>

#include "hptau/error.hpp"

namespace hptau {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorKind::BadNormalization: return "BadNormalization";
    case ErrorKind::InsufficientOrder: return "InsufficientOrder";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::DegenerateFamily: return "DegenerateFamily";
    case ErrorKind::OddLength: return "OddLength";
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NonDiagonalizableLeading: return "NonDiagonalizableLeading";
    case ErrorKind::ResonantExponents: return "ResonantExponents";
    case ErrorKind::ZeroParameter: return "ZeroParameter";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
  }
  return "Unknown";
}

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  std::size_t start = 0;
  if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) start = 1;
  if (start == s.size()) return false;
  for (std::size_t k = start; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  return true;
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
    throw Error(ErrorKind::Parse, "not a rational literal: '" + std::string(text) + "'");
  }
  mpz_class p(strip_plus(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  Scalar value(p, q);
  value.canonicalize();
  return value;
}

std::string to_string(const Scalar& value) { return value.get_str(10); }

}  // namespace hptau
