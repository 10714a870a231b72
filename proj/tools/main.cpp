#include <cstdio>

int main() {
  std::puts("coring-lab: command-line interface under construction");
  return 2;
}
