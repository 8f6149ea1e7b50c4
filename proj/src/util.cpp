#include "ksys/util.hpp"

#include <cstdio>
#include <cstdlib>

namespace ksys {

std::string fmt_g(double x) {
  if (x == 0.0) x = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

int resolve_threads(int cli_threads) {
  int n = cli_threads;
  if (n <= 0) {
    if (const char* env = std::getenv("KSYS_THREADS")) n = std::atoi(env);
  }
  if (n <= 0) n = 1;
  if (n > 64) n = 64;
  return n;
}

}  // namespace ksys
