#include "superlie/fixtures.hpp"

namespace superlie::fixtures {

namespace {

StructureConstants ex2_table() {
  auto basis = Alphabet::make({{"x", Parity::Even}, {"a", Parity::Odd}});
  StructureConstants sc(basis, 1, Parity::Odd);
  const Letter x = 0, a = 1;
  sc.set_bracket(a, a, {{x, 1}});
  sc.set_derivation(x, {{a, 1}});
  return sc;
}

}  // namespace

HnnPresentation ex1() {
  auto basis = Alphabet::make({{"a", Parity::Even}, {"x", Parity::Even}});
  StructureConstants sc(basis, 1, Parity::Even);
  sc.set_derivation(0, {{1, 1}});
  return HnnPresentation(std::move(sc));
}

HnnPresentation ex2() { return HnnPresentation(ex2_table()); }

StructureConstants ex2_corrupted() {
  StructureConstants sc = ex2_table();
  const Letter x = 0, a = 1;
  sc.set_bracket(a, x, {{a, 1}});
  return sc;
}

HnnPresentation ex3() {
  auto basis = Alphabet::make({{"a", Parity::Odd}, {"x", Parity::Even}});
  StructureConstants sc(basis, 1, Parity::Odd);
  sc.set_derivation(0, {{1, 1}});
  return HnnPresentation(std::move(sc));
}

HnnPresentation sl2_borel() {
  auto basis = Alphabet::make({{"h", Parity::Even}, {"e", Parity::Even}, {"f", Parity::Even}});
  StructureConstants sc(basis, 2, Parity::Even);
  const Letter h = 0, e = 1, f = 2;
  sc.set_bracket(h, e, {{e, 2}});
  sc.set_bracket(h, f, {{f, -2}});
  sc.set_bracket(e, f, {{h, 1}});
  sc.set_derivation(h, {{f, 2}});
  sc.set_derivation(e, {{h, -1}});
  return HnnPresentation(std::move(sc));
}

}  // namespace superlie::fixtures
