#include <cstdio>

int main() {
  std::fprintf(stderr, "usage: ksys <census|search|construct|slide|project|bounds|verify> ...\n");
  return 2;
}
