#pragma once

#include "superlie/hnn.hpp"

/// Small presentations used by the tests, the acceptance suite and the CLI docs.
namespace superlie::fixtures {

/// A = <a> even, complement <x> even, abelian, d(a) = x, |d| = 0.
HnnPresentation ex1();

/// A = <x> even, complement <a> odd, [a,a] = x, d(x) = a, |d| = 1.
HnnPresentation ex2();

/// ex2's table with the extra entry [a,x] = a, which breaks the Jacobi identity.
StructureConstants ex2_corrupted();

/// A = <a> odd, complement <x> even, abelian, d(a) = x, |d| = 1.
HnnPresentation ex3();

/// sl2 with basis h < e < f, A = <h,e>, d = ad f restricted to A.
HnnPresentation sl2_borel();

}  // namespace superlie::fixtures
