#pragma once

// Imaginary quadratic orders O_c = Z + c O_K and their class numbers.

#include "cmlab/arith.hpp"

#include <vector>

namespace cmlab::cmfields {

struct ImagQuadOrder {
    i64 dK = -4;  // fundamental discriminant
    i64 c = 1;    // conductor

    i64 discriminant() const { return c * c * dK; }
    bool operator==(const ImagQuadOrder&) const = default;
};

bool is_fundamental(i64 d);

/// Discriminant of Q(sqrt d): d itself when fundamental, 4d for a
/// squarefree d = 2, 3 mod 4. Throws otherwise.
i64 field_discriminant(i64 d);

/// Validated constructor: dK a negative fundamental discriminant, c >= 1.
ImagQuadOrder make_order(i64 dK, i64 c = 1);
/// Order of discriminant D < 0, D = 0, 1 mod 4.
ImagQuadOrder order_of_discriminant(i64 D);

/// #Pic(O_D), from Dirichlet's formula at the fundamental discriminant and
/// the conductor formula.
i64 class_number(i64 D);
i64 class_number(const ImagQuadOrder& o);

/// #O^x: 6 for D = -3, 4 for D = -4, else 2.
i64 unit_count(i64 D);

/// Kronecker symbol (dK | p): 1 split, 0 ramified, -1 inert.
int splitting_type(i64 dK, i64 p);

/// O_{c0 p^n} for n = 0..n_max. Requires p prime, p not dividing c0.
std::vector<ImagQuadOrder> conductor_tower(i64 dK, i64 c0, i64 p, int n_max);

}  // namespace cmlab::cmfields
