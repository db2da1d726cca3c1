#include <string>

namespace hsw::detail {

// Embedded copy of data/chamber_tables.txt; a unit test asserts the two are
// byte-identical so the in-repo file can be audited independently.
const std::string& chamber_tables_raw() {
    static const std::string text = R"DATA(# Stable base locus chamber tables for the Hilbert scheme of n points in P^2, n = 2..9.
#
# Each `table` block lists the rays of the effective cone from B to the
# effective edge in the order B, H, then H - aB with a increasing.  A `locus`
# line between two rows is the stable base locus of the chamber they bound;
# the chamber includes its inner (larger-a) edge ray, except that the ray H
# itself has empty stable base locus.
#
# Tokens: rays are B, H, or H-p/qB.  Dual curves: C (diagonal fiber), C_r
# (line pencil), A2_k (conic pencil); the ambient n is the table's n.  Locus
# atoms: Empty, B, L_k (length-k collinear subscheme), Q_k (length-k
# subscheme on a conic); a union is written as atoms separated by spaces.
# version 1

table n=2
row ray=B divisor=B dual=C_1
locus B
row ray=H divisor=H dual=C
locus Empty
row ray=H-1/2B divisor=D_1(2) dual=C_2
end

table n=3
row ray=B divisor=B dual=C_1
locus B
row ray=H divisor=H dual=C
locus Empty
row ray=H-1/4B divisor=D_2(3) dual=C_3
locus L_3
row ray=H-1/2B divisor=E_1(3) dual=C_2
end

table n=4
row ray=B divisor=B dual=C_1
locus B
row ray=H divisor=H dual=C
locus Empty
row ray=H-1/6B divisor=D_3(4) dual=C_4
locus L_4
row ray=H-1/4B divisor=D_2(4) dual=C_3
locus L_3
row ray=H-1/3B divisor=E_1(4) dual=A2_4
end

table n=5
row ray=B divisor=B dual=C_1
locus B
row ray=H divisor=H dual=C
locus Empty
row ray=H-1/8B divisor=D_4(5) dual=C_5
locus L_5
row ray=H-1/6B divisor=D_3(5) dual=C_4
locus L_4
row ray=H-1/4B divisor=D_2(5) dual=C_3
end

table n=6
row ray=B divisor=B dual=C_1
locus B
row ray=H divisor=H dual=C
locus Empty
row ray=H-1/10B divisor=D_5(6) dual=C_6
locus L_6
row ray=H-1/8B divisor=D_4(6) dual=C_5
locus L_5
row ray=H-1/6B divisor=D_3(6) dual=C_4
locus L_4
row ray=H-1/5B divisor=D_{T(1)}(6) dual=A2_6
locus Q_6
row ray=H-1/4B divisor=E_2(6) dual=C_3
end

table n=7
row ray=B divisor=B dual=C_1
locus B
row ray=H divisor=H dual=C
locus Empty
row ray=H-1/12B divisor=D_6(7) dual=C_7
locus L_7
row ray=H-1/10B divisor=D_5(7) dual=C_6
locus L_6
row ray=H-1/8B divisor=D_4(7) dual=C_5
locus L_5
row ray=H-1/6B divisor=D_3(7) dual=C_4,A2_7
locus L_4 Q_7
row ray=H-1/5B divisor=D_{T(1)}(7) dual=A2_6
locus Q_6
row ray=H-5/24B divisor=E_2(7)
end

table n=8
row ray=B divisor=B dual=C_1
locus B
row ray=H divisor=H dual=C
locus Empty
row ray=H-1/14B divisor=D_7(8) dual=C_8
locus L_8
row ray=H-1/12B divisor=D_6(8) dual=C_7
locus L_7
row ray=H-1/10B divisor=D_5(8) dual=C_6
locus L_6
row ray=H-1/8B divisor=D_4(8) dual=C_5
locus L_5
row ray=H-1/7B divisor=D_{T(2)}(8) dual=A2_8
locus L_5 Q_8
row ray=H-1/6B divisor=D_3(8) dual=C_4,A2_7
locus L_4 Q_7
row ray=H-3/16B divisor=D_{coker(O(1)^2->O(2)^5)}(8)
end

table n=9
row ray=B divisor=B dual=C_1
locus B
row ray=H divisor=H dual=C
locus Empty
row ray=H-1/16B divisor=D_8(9) dual=C_9
locus L_9
row ray=H-1/14B divisor=D_7(9) dual=C_8
locus L_8
row ray=H-1/12B divisor=D_6(9) dual=C_7
locus L_7
row ray=H-1/10B divisor=D_5(9) dual=C_6
locus L_6
row ray=H-1/8B divisor=D_4(9) dual=C_5,A2_9
locus L_5 Q_9
row ray=H-1/7B divisor=D_{T(2)}(9) dual=A2_8
locus L_5 Q_8
row ray=H-1/6B divisor=D_3(9)
end
)DATA";
    return text;
}

} // namespace hsw::detail
