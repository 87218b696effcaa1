// Copyright 2026 The besov-euler Authors
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

#include "besov/field.hpp"

namespace besov {

// Forward transform normalized so coef(k) = (1/N^d) * sum_x u(x) exp(-i xi_k . x);
// a lattice-aligned cos(xi_k . x) has coefficient 1/2 at +k and -k.
Spectrum transform_forward(const ScalarField& f);
VectorSpectrum transform_forward(const VectorField& v);

// Inverse of transform_forward. The stored half spectrum is Hermitian by
// construction; the imaginary parts of the self-conjugate planes are ignored.
ScalarField transform_inverse(const Spectrum& spectrum);
VectorField transform_inverse(const VectorSpectrum& spectrum);

// Largest |coef(-k) - conj(coef(k))| over the self-conjugate planes of the
// stored half (last index 0 and N/2), relative to the largest coefficient.
double hermitian_defect(const Spectrum& spectrum);

}  // namespace besov
