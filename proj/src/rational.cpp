#include "ksys/rational.hpp"

namespace ksys {

std::string rat_str(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

Rat rat_parse(const std::string& s) {
  auto bad = [&] { throw invalid_input("bad rational literal: " + s); };
  if (s.empty()) bad();
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) bad();
    return Rat(num, den);
  } catch (const std::exception&) {
    bad();
  }
  return Rat();  // unreachable
}

}  // namespace ksys
