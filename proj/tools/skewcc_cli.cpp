#include <cstdio>
int main() { std::puts("skewcc cli: under construction"); return 2; }
