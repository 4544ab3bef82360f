#include "envelkit/catalog.hpp"

#include <set>
#include <sstream>

namespace envelkit {

namespace {

struct FamilyInfo {
    Family family;
    const char* name;
    std::size_t params;
    std::size_t dim;
};

constexpr FamilyInfo kFamilies[] = {
    {Family::L1, "L1", 0, 3},  {Family::L2, "L2", 0, 3},  {Family::L3, "L3", 1, 3},
    {Family::L4, "L4", 1, 3},  {Family::M1, "M1", 0, 4},  {Family::M2, "M2", 0, 4},
    {Family::M3, "M3", 1, 4},  {Family::M4, "M4", 0, 4},  {Family::M5, "M5", 0, 4},
    {Family::M6, "M6", 2, 4},  {Family::M7, "M7", 2, 4},  {Family::M8, "M8", 0, 4},
    {Family::M9, "M9", 1, 4},  {Family::M10, "M10", 1, 4}, {Family::M11, "M11", 2, 4},
    {Family::M12, "M12", 0, 4}, {Family::M13, "M13", 1, 4}, {Family::M14, "M14", 1, 4},
};

const FamilyInfo& info(Family f) {
    for (const auto& fi : kFamilies)
        if (fi.family == f) return fi;
    throw Error("internal: unknown family");
}

// T^2 - T - a irreducible over the id's field
bool quadratic_t2_t_a_irreducible(const Scalar& a) {
    const FieldTag& tag = a.field();
    if (tag.characteristic() != 2) {
        Scalar disc = Scalar(tag, 1) + Scalar(tag, 4) * a;
        return !is_square(disc);
    }
    for (unsigned long r = 0; r < tag.characteristic(); ++r) {
        Scalar x(tag, static_cast<long>(r));
        if ((x * x - x - a).is_zero()) return false;
    }
    return true;
}

void check_valid(const CatalogId& id) {
    const FamilyInfo& fi = info(id.family);
    if (id.params.size() != fi.params)
        throw InvalidAlgebraError("BadParameter: " + std::string(fi.name) + " takes " +
                                  std::to_string(fi.params) + " parameter(s)");
    for (const auto& p : id.params)
        if (p.field() != id.field)
            throw InvalidAlgebraError("BadParameter: parameter field mismatch in " + id.str());
    unsigned long ch = id.field.characteristic();
    switch (id.family) {
        case Family::M9:
            if (!quadratic_t2_t_a_irreducible(id.params[0]))
                throw InvalidAlgebraError("BadParameter: T^2-T-a must be irreducible for " +
                                          id.str());
            break;
        case Family::M10:
            if (ch != 2)
                throw InvalidAlgebraError("WrongCharacteristic: " + id.str() +
                                          " requires characteristic 2");
            if (!id.params[0].is_zero() && is_square(id.params[0]))
                throw InvalidAlgebraError("BadParameter: " + id.str() +
                                          " requires a = 0 or a outside the squares");
            break;
        case Family::M11:
            if (ch != 2)
                throw InvalidAlgebraError("WrongCharacteristic: " + id.str() +
                                          " requires characteristic 2");
            if (id.params[0].is_zero())
                throw InvalidAlgebraError("BadParameter: " + id.str() + " requires a != 0");
            if (id.params[1].is_one())
                throw InvalidAlgebraError("BadParameter: " + id.str() + " requires b != 1");
            break;
        case Family::M13:
            if (id.params[0].is_zero() && ch == 2)
                throw InvalidAlgebraError("WrongCharacteristic: " + id.str() +
                                          " requires characteristic != 2");
            break;
        case Family::M14:
            if (id.params[0].is_zero())
                throw InvalidAlgebraError("BadParameter: " + id.str() + " requires a != 0");
            break;
        default:
            break;
    }
}

} // namespace

std::string family_name(Family f) { return info(f).name; }
std::size_t family_param_count(Family f) { return info(f).params; }
std::size_t family_dim(Family f) { return info(f).dim; }

std::string CatalogId::str() const {
    std::ostringstream os;
    os << family_name(family);
    if (!params.empty()) {
        os << "[";
        for (std::size_t i = 0; i < params.size(); ++i) {
            if (i) os << ",";
            os << params[i].coeff_str();
        }
        os << "]";
    }
    if (!field.is_rationals()) os << "@" << field.str();
    return os.str();
}

CatalogId CatalogId::parse(const std::string& text) {
    std::string body = text;
    FieldTag tag = FieldTag::rationals();
    if (auto at = body.find('@'); at != std::string::npos) {
        tag = FieldTag::parse(body.substr(at + 1));
        body = body.substr(0, at);
    }
    std::string name = body, args;
    if (auto br = body.find('['); br != std::string::npos) {
        if (body.back() != ']') throw ParseError("bad catalog id: " + text);
        name = body.substr(0, br);
        args = body.substr(br + 1, body.size() - br - 2);
    }
    for (const auto& fi : kFamilies) {
        if (name != fi.name) continue;
        CatalogId id{fi.family, {}, tag};
        if (!args.empty()) {
            std::istringstream as(args);
            std::string tok;
            while (std::getline(as, tok, ','))
                id.params.push_back(Scalar::parse(tag, tok));
        }
        if (id.params.size() != fi.params)
            throw ParseError("catalog id " + text + ": " + fi.name + " takes " +
                             std::to_string(fi.params) + " parameter(s)");
        return id;
    }
    throw ParseError("unknown catalog family in '" + text + "'");
}

LieAlgebra construct(const CatalogId& id) {
    check_valid(id);
    const FieldTag& F = id.field;
    std::size_t d = family_dim(id.family);
    LieAlgebra L(d, F);
    Scalar one = Scalar::one(F);
    auto e = [&](std::size_t k, const Scalar& c) {
        Vec v = zero_vec(d, F);
        v[k] = c;
        return v;
    };
    auto a = [&]() { return id.params[0]; };
    auto b = [&]() { return id.params[1]; };

    switch (id.family) {
        case Family::L1:
        case Family::M1:
            break;
        case Family::L2:
            L.set_bracket(2, 0, e(0, one));
            L.set_bracket(2, 1, e(1, one));
            break;
        case Family::L3: {
            L.set_bracket(2, 0, e(1, one));
            Vec v = zero_vec(d, F);
            v[0] = a();
            v[1] = one;
            L.set_bracket(2, 1, v);
            break;
        }
        case Family::L4:
            L.set_bracket(2, 0, e(1, one));
            L.set_bracket(2, 1, e(0, a()));
            break;
        case Family::M2:
            L.set_bracket(3, 0, e(0, one));
            L.set_bracket(3, 1, e(1, one));
            L.set_bracket(3, 2, e(2, one));
            break;
        case Family::M3: {
            L.set_bracket(3, 0, e(0, one));
            L.set_bracket(3, 1, e(2, one));
            Vec v = zero_vec(d, F);
            v[1] = -a();
            v[2] = a() + one;
            L.set_bracket(3, 2, v);
            break;
        }
        case Family::M4:
            L.set_bracket(3, 1, e(2, one));
            L.set_bracket(3, 2, e(2, one));
            break;
        case Family::M5:
            L.set_bracket(3, 1, e(2, one));
            break;
        case Family::M6: {
            L.set_bracket(3, 0, e(1, one));
            L.set_bracket(3, 1, e(2, one));
            Vec v = zero_vec(d, F);
            v[0] = a();
            v[1] = b();
            v[2] = one;
            L.set_bracket(3, 2, v);
            break;
        }
        case Family::M7: {
            L.set_bracket(3, 0, e(1, one));
            L.set_bracket(3, 1, e(2, one));
            Vec v = zero_vec(d, F);
            v[0] = a();
            v[1] = b();
            L.set_bracket(3, 2, v);
            break;
        }
        case Family::M8:
            L.set_bracket(0, 1, e(1, one));
            L.set_bracket(2, 3, e(3, one));
            break;
        case Family::M9: {
            Vec v = zero_vec(d, F);
            v[0] = one;
            v[1] = a();
            L.set_bracket(3, 0, v);
            L.set_bracket(3, 1, e(0, one));
            L.set_bracket(2, 0, e(0, one));
            L.set_bracket(2, 1, e(1, one));
            break;
        }
        case Family::M10:
            L.set_bracket(3, 0, e(1, one));
            L.set_bracket(3, 1, e(0, a()));
            L.set_bracket(2, 0, e(0, one));
            L.set_bracket(2, 1, e(1, one));
            break;
        case Family::M11: {
            L.set_bracket(3, 0, e(0, one));
            L.set_bracket(3, 1, e(1, b()));
            L.set_bracket(3, 2, e(2, one + b()));
            L.set_bracket(2, 0, e(1, one));
            L.set_bracket(2, 1, e(0, a()));
            break;
        }
        case Family::M12:
            L.set_bracket(3, 0, e(0, one));
            L.set_bracket(3, 1, e(1, Scalar(F, 2)));
            L.set_bracket(3, 2, e(2, one));
            L.set_bracket(2, 0, e(1, one));
            break;
        case Family::M13: {
            Vec v = zero_vec(d, F);
            v[0] = one;
            v[2] = a();
            L.set_bracket(3, 0, v);
            L.set_bracket(3, 1, e(1, one));
            L.set_bracket(3, 2, e(0, one));
            L.set_bracket(2, 0, e(1, one));
            break;
        }
        case Family::M14:
            L.set_bracket(3, 0, e(2, a()));
            L.set_bracket(3, 2, e(0, one));
            L.set_bracket(2, 0, e(1, one));
            break;
    }
    auto rep = validate(L);
    if (!rep.ok)
        throw InvalidAlgebraError("catalog table violates Jacobi: " + rep.str());
    L.set_provenance(id.str());
    return L;
}

IsoResult iso_within_family(const CatalogId& a, const CatalogId& b) {
    if (a.family != b.family)
        throw PreconditionError("DifferentFamilies: compare through certificates instead");
    if (a.field != b.field)
        throw PreconditionError("MixedFields: ids over different fields");
    check_valid(a);
    check_valid(b);
    const FieldTag& F = a.field;
    auto yes = [](bool v) { return v ? IsoResult::Isomorphic : IsoResult::NotIsomorphic; };
    switch (a.family) {
        case Family::L1:
        case Family::L2:
        case Family::M1:
        case Family::M2:
        case Family::M4:
        case Family::M5:
        case Family::M8:
        case Family::M12:
            return IsoResult::Isomorphic;
        case Family::L3:
        case Family::M3:
        case Family::M13:
            return yes(a.params[0] == b.params[0]);
        case Family::M6:
            return yes(a.params[0] == b.params[0] && a.params[1] == b.params[1]);
        case Family::L4: {
            const Scalar &pa = a.params[0], &pb = b.params[0];
            if (pa.is_zero() || pb.is_zero()) return yes(pa.is_zero() && pb.is_zero());
            return yes(is_square(pa / pb));
        }
        case Family::M14:
            return yes(is_square(a.params[0] / b.params[0]));
        case Family::M7: {
            const Scalar &pa = a.params[0], &qa = a.params[1];
            const Scalar &pc = b.params[0], &qc = b.params[1];
            if (pa.is_zero() != pc.is_zero()) return IsoResult::NotIsomorphic;
            if (pa.is_zero()) {
                // Group 5 row: b = alpha^2 c
                if (qa.is_zero() || qc.is_zero()) return yes(qa.is_zero() && qc.is_zero());
                return yes(is_square(qa / qc));
            }
            return yes(solve_scaling(pa, qa, pc, qc).has_value());
        }
        case Family::M9: {
            const Scalar &pa = a.params[0], &pb = b.params[0];
            if (F.characteristic() != 2) {
                Scalar quarter = Scalar(F, 1) / Scalar(F, 4);
                return yes(is_square((pa + quarter) / (pb + quarter)));
            }
            // char 2: T^2 + T + a + b reducible
            for (unsigned long r = 0; r < F.characteristic(); ++r) {
                Scalar x(F, static_cast<long>(r));
                if ((x * x + x + pa + pb).is_zero()) return IsoResult::Isomorphic;
            }
            return IsoResult::NotIsomorphic;
        }
        case Family::M10: {
            // Y^2 + b X^2 + a = 0 solvable with X != 0; exhaustive over F_p
            const Scalar &pa = a.params[0], &pb = b.params[0];
            unsigned long p = F.characteristic();
            for (unsigned long x = 1; x < p; ++x)
                for (unsigned long y = 0; y < p; ++y) {
                    Scalar X(F, static_cast<long>(x)), Y(F, static_cast<long>(y));
                    if ((Y * Y + pb * X * X + pa).is_zero()) return IsoResult::Isomorphic;
                }
            return IsoResult::NotIsomorphic;
        }
        case Family::M11: {
            const Scalar &pa = a.params[0], &pb = a.params[1];
            const Scalar &pc = b.params[0], &pd = b.params[1];
            Scalar one = Scalar::one(F);
            Scalar delta = (pb + one) / (pd + one);
            bool first = is_square(pa / pc);
            bool second = is_square((delta * delta + (pb + one) * delta + pb) / pc);
            return yes(first && second);
        }
    }
    return IsoResult::Undecided;
}

GroupTag group_of(const LieAlgebra& L) {
    if (L.dim() != 4) throw PreconditionError("NotDim4: group placement needs dimension 4");
    if (!is_solvable(L)) throw PreconditionError("NotSolvable");
    auto ds = derived_series(L);
    if (ds[1].dim() == 0) return GroupTag{1};
    if (ds.size() > 2 && ds[2].dim() != 0) return GroupTag{2};
    std::size_t dl = ds[1].dim();
    if (dl == 1) return GroupTag{3};
    if (dl == 3) return GroupTag{4};
    return GroupTag{center(L).dim() != 0 ? 5 : 6};
}

std::optional<GroupTag> table_group(const CatalogId& id) {
    switch (id.family) {
        case Family::M1:
            return GroupTag{1};
        case Family::M12:
        case Family::M14:
        case Family::M11:
            return GroupTag{2};
        case Family::M13:
            return id.params[0].is_zero() ? GroupTag{6} : GroupTag{2};
        case Family::M4:
        case Family::M5:
            return GroupTag{3};
        case Family::M2:
            return GroupTag{4};
        case Family::M3:
            return id.params[0].is_zero() ? GroupTag{5} : GroupTag{4};
        case Family::M6:
        case Family::M7:
            return id.params[0].is_zero() ? GroupTag{5} : GroupTag{4};
        case Family::M8:
        case Family::M9:
        case Family::M10:
            return GroupTag{6};
        default:
            return std::nullopt; // 3-dimensional families
    }
}

std::vector<CatalogId> enumerate_catalog(const FieldTag& field,
                                         const std::vector<Scalar>& grid) {
    std::vector<CatalogId> out;
    std::set<std::string> seen;
    auto push = [&](CatalogId id) {
        try {
            check_valid(id);
        } catch (const InvalidAlgebraError&) {
            return;
        }
        if (seen.insert(id.str()).second) out.push_back(std::move(id));
    };

    for (Family f : {Family::L1, Family::L2, Family::M1, Family::M2, Family::M4,
                     Family::M5, Family::M8, Family::M12})
        push(CatalogId{f, {}, field});
    // standalone zero-parameter rows
    push(CatalogId{Family::M13, {Scalar::zero(field)}, field});
    push(CatalogId{Family::M10, {Scalar::zero(field)}, field});

    for (const auto& a : grid) {
        for (Family f : {Family::L3, Family::L4, Family::M3, Family::M9})
            push(CatalogId{f, {a}, field});
        if (!a.is_zero())
            for (Family f : {Family::M13, Family::M14, Family::M10})
                push(CatalogId{f, {a}, field});
        for (const auto& b : grid) {
            push(CatalogId{Family::M6, {a, b}, field});
            push(CatalogId{Family::M7, {a, b}, field});
            push(CatalogId{Family::M11, {a, b}, field});
        }
    }
    return out;
}

std::optional<CatalogId> recognize_3dim(const LieAlgebra& L) {
    if (L.dim() != 3 || !is_solvable(L)) return std::nullopt;
    const FieldTag& F = L.field();
    Subspace lp = derived_subalgebra(L);
    if (lp.dim() == 0) return CatalogId{Family::L1, {}, F};
    if (lp.dim() == 1) {
        if (nilpotency_class(L)) return CatalogId{Family::L4, {Scalar::zero(F)}, F};
        return CatalogId{Family::L3, {Scalar::zero(F)}, F};
    }
    if (lp.dim() != 2) return std::nullopt;
    if (product_space(L, lp, lp).dim() != 0) return std::nullopt;
    Subspace C = centralizer(L, lp);
    if (L.dim() - C.dim() != 1) return std::nullopt;
    Vec x;
    for (std::size_t i = 0; i < 3; ++i) {
        x = unit_vec(3, i, F);
        if (!C.contains(x)) break;
    }
    Mat T = adjoint_on(L, x, lp);
    Scalar tr = T[0][0] + T[1][1];
    Scalar det = T[0][0] * T[1][1] - T[0][1] * T[1][0];
    bool scalar_matrix = T[0][1].is_zero() && T[1][0].is_zero() && T[0][0] == T[1][1];
    if (scalar_matrix) return CatalogId{Family::L2, {}, F};
    if (!tr.is_zero()) {
        // normalize x so that tr = 1; then a = -det
        return CatalogId{Family::L3, {-(det / (tr * tr))}, F};
    }
    return CatalogId{Family::L4, {-det}, F};
}

} // namespace envelkit
