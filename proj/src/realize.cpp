#include "mockgl/realize.hpp"

#include "mockgl/matalg.hpp"

namespace mgl {

namespace {

void add_crossings(BandPresentation& b, int over, int under, const Int& even_amount) {
    const int sign = even_amount > 0 ? 1 : -1;
    const Int count = iabs(even_amount) / 2;
    for (Int k = 0; k < count; ++k) b.crossings.push_back({over, under, sign});
}

}  // namespace

BandPresentation realize(const IntMatrix& a) {
    if (!a.square()) throw PreconditionError("realize needs a square matrix");
    const int n = a.rows();
    BandPresentation b;
    b.n_bands = n;
    if (n == 0) {
        b.feet = FeetKind::Unlinked;
        return b;
    }
    if (!is_odd(det(a))) throw PreconditionError("realize needs an odd determinant");
    const MockSeifertMatrix m(a);
    const Mod2Class cls = mod2_classify(m);
    const IntMatrix p = lift_unimodular(cls.witness);
    const IntMatrix t = p.transpose() * a * p;

    b.twists.resize(n);
    for (int i = 0; i < n; ++i) b.twists[i] = t(i, i);
    if (cls.kind == Mod2Class::Kind::Identity) {
        b.feet = FeetKind::Unlinked;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) add_crossings(b, i, j, t(i, j));
    } else {
        b.feet = FeetKind::AlternatingPairs;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                Int v = t(i, j);
                if (i / 2 == j / 2) v += i < j ? -1 : 1;
                add_crossings(b, i, j, v);
            }
    }
    b.basis = to_int(inverse(to_rat(p)));
    return b;
}

}  // namespace mgl
