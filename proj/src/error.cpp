#include "qdtough/error.hpp"

#include <string>

#include "qdtough/rational.hpp"

namespace qdtough {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidSpec: return "invalid-spec";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::EmptyResult: return "empty-result";
    case ErrorKind::Disconnected: return "disconnected-graph";
    case ErrorKind::Capacity: return "capacity";
    case ErrorKind::NumericFailure: return "numeric-failure";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

Rational parse_rational(const std::string& text) {
  auto parse_int = [&](const std::string& part) -> std::int64_t {
    std::size_t used = 0;
    std::int64_t value = 0;
    try {
      value = std::stoll(part, &used);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "not a rational: '" + text + "'");
    }
    if (used != part.size()) throw Error(ErrorKind::Parse, "not a rational: '" + text + "'");
    return value;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  const std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + text + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

}  // namespace qdtough
