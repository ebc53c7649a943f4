#include <cstdio>

int main() {
  std::puts("lcmod: placeholder");
  return 0;
}
