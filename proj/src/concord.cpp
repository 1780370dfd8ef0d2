#include "mockgl/concord.hpp"

#include "mockgl/lattice.hpp"
#include "mockgl/parity.hpp"

namespace mgl {

namespace {

Int squarefree_part(const Int& n) {
    if (n == 0) return 0;
    Int m = iabs(n), out = 1;
    for (Int p = 2; p * p <= m; ++p) {
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e % 2) out *= p;
        if (p > 100000) break;
    }
    out *= m;
    return n < 0 ? Int(-out) : out;
}

}  // namespace

ObstructionBundle make_bundle(const MockSeifertMatrix& a, int budget) {
    ObstructionBundle b;
    b.alexander = alexander(a);
    b.alexander_core = normalize_text(b.alexander);
    if (!b.alexander.is_zero())
        b.fox_milnor = fox_milnor(b.alexander);
    else
        b.fox_milnor.reason = "Alexander polynomial vanishes";
    b.signature = signature_function(a);
    b.det_symmetric = a.size() == 0 ? Int(1) : det(IntMatrix(a.entries + a.entries.transpose()));
    b.det_square_class = squarefree_part(b.det_symmetric);
    b.metabolic = metabolic(a, budget);
    return b;
}

ConcordanceClass class_of(const MockSeifertMatrix& a, bool waiver, int budget) {
    ConcordanceClass c;
    c.admissibility = is_admissible(a);
    if (c.admissibility.verdict == Admissibility::No)
        throw PreconditionError("matrix is not admissible: " + c.admissibility.detail);
    if (c.admissibility.verdict == Admissibility::Unknown) {
        if (!waiver) throw PreconditionError("admissibility unknown (" + c.admissibility.detail + "); waiver required");
        c.waived = true;
    }
    c.representative = a;
    if (!c.representative.euler) c.representative.euler = Int(0);
    c.bundle = make_bundle(c.representative, budget);
    return c;
}

ConcordanceClass identity_class() { return class_of(MockSeifertMatrix(IntMatrix(0, 0), Int(0))); }

ConcordanceClass group_op(const ConcordanceClass& x, const ConcordanceClass& y, int budget) {
    return class_of(block_sum(x.representative, y.representative), x.waived || y.waived, budget);
}

ConcordanceClass inverse(const ConcordanceClass& x, int budget) {
    return class_of(negate(x.representative), x.waived, budget);
}

std::string to_string(OrderBound::Kind k) {
    switch (k) {
        case OrderBound::Kind::One: return "one";
        case OrderBound::Kind::Two: return "two";
        case OrderBound::Kind::Four: return "four";
        case OrderBound::Kind::Infinite: return "infinite";
        default: return "lower_bound";
    }
}

OrderBound order_bound(const MockSeifertMatrix& a, int budget) {
    OrderBound ob;
    const SignatureFunction sf = signature_function(a);
    if (sf.any_nonzero()) {
        ob.kind = OrderBound::Kind::Infinite;
        ob.lower = 0;
        return ob;
    }
    MockSeifertMatrix power = a;
    for (int k : {1, 2, 4}) {
        if (k > 1) power = block_sum(power, power);
        OrderBound::Evidence ev{k, metabolic(power, budget)};
        ob.evidence.push_back(ev);
        if (ev.verdict.certificate()) {
            ob.divides = k;
            break;
        }
        if (ev.verdict.obstructed()) {
            ob.not_dividing = k;
            ob.lower = 2 * k;
        }
    }
    if (ob.divides && ob.not_dividing * 2 == *ob.divides) {
        ob.kind = *ob.divides == 1 ? OrderBound::Kind::One
                  : *ob.divides == 2 ? OrderBound::Kind::Two
                                     : OrderBound::Kind::Four;
        ob.lower = *ob.divides;
    } else if (ob.divides && *ob.divides == 1) {
        ob.kind = OrderBound::Kind::One;
        ob.lower = 1;
    } else {
        ob.kind = OrderBound::Kind::LowerBound;
    }
    return ob;
}

OrderBound order_bound(const ConcordanceClass& x, int budget) { return order_bound(x.representative, budget); }

MockSeifertMatrix levine_matrix(const Diagram& d) {
    const auto [proj, iterations] = stable_project(d, ParityKind::mod(2));
    (void)iterations;
    MockSeifertMatrix m = preferred_matrix(proj);
    while (m.euler && *m.euler != 0) m = s_star_move(m, HalfBand{*m.euler > 0 ? 1 : -1});
    return m;
}

ConcordanceClass levine_map(const Diagram& d, int budget) { return class_of(levine_matrix(d), true, budget); }

IsometricStructure isometric_structure(const MockSeifertMatrix& a) {
    if (a.det() == 0) throw PreconditionError("isometric structure needs a nonsingular matrix");
    IsometricStructure r;
    const int n = a.size();
    const RatMatrix A = to_rat(a.entries);
    const RatMatrix At = A.transpose();
    r.q = (A + At) * Rat(1, 2);
    r.s = inverse(At) * A;
    const RatMatrix sym = A + At;
    r.isometry_verified = r.s.transpose() * sym * r.s == sym;
    const RatMatrix sp = r.s + RatMatrix::identity(n);
    r.reconstructible = n == 0 || det(sp) != 0;
    if (r.reconstructible) r.reconstruction_verified = (r.q * r.s * inverse(sp)) * Rat(2) == A;
    return r;
}

MockSeifertMatrix a_k(int k) { return MockSeifertMatrix(IntMatrix{{Int(k), Int(1)}, {Int(-1), Int(k)}}); }

MockSeifertMatrix diag_pq(const Int& p, const Int& q) { return MockSeifertMatrix(diag({Int(-p), q})); }

}  // namespace mgl
