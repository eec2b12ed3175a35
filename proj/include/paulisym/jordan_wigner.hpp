// Copyright 2025-2026 The paulisym developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>

#include "paulisym/fock.hpp"
#include "paulisym/pauli.hpp"

namespace paulisym {

/// Jordan-Wigner image of a single ladder operator on mode k of M:
/// sigma_k^-+ tensor Z_{k+1} ... Z_M, expanded into X/Z form as
/// (X_k +- X_k Z_k)/2 times the Z tail (+ for the daggered operator).
inline PauliSum jw_lower_mode(std::size_t k, bool dagger, std::size_t m) {
  if (k < 1 || k > m) throw std::out_of_range("jw_lower_mode: mode index out of range");

  Gf2Vector r = Gf2Vector::unit(m, k - 1);
  Gf2Vector tail(m);
  for (std::size_t j = k; j < m; ++j) tail.set(j, true);

  PauliSum out(m);
  out.add(0.5, PauliString(r, tail));
  Gf2Vector tail_with_k = tail;
  tail_with_k.set(k - 1, true);
  out.add(dagger ? 0.5 : -0.5, PauliString(r, tail_with_k));
  return out;
}

/// Substitutes the Jordan-Wigner images into every term of the
/// second-quantized Hamiltonian, multiplies out and collects.
inline PauliSum jw_lower_hamiltonian(const SecondQuantizedHamiltonian& h) {
  if (h.modes == 0) throw std::invalid_argument("jw_lower_hamiltonian: no modes");
  h.validate();

  PauliSum out(h.modes);
  for (const auto& t : h.one_body) {
    PauliSum term = jw_lower_mode(t.i, true, h.modes) * jw_lower_mode(t.j, false, h.modes);
    term *= t.coeff;
    out.add(term);
  }
  for (const auto& t : h.two_body) {
    PauliSum term = jw_lower_mode(t.i, true, h.modes) * jw_lower_mode(t.j, true, h.modes);
    term = term * jw_lower_mode(t.k, false, h.modes);
    term = term * jw_lower_mode(t.l, false, h.modes);
    term *= t.coeff;
    out.add(term);
  }
  return out;
}

}  // namespace paulisym
