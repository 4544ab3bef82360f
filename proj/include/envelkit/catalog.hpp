#ifndef ENVELKIT_CATALOG_HPP
#define ENVELKIT_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "envelkit/liealg.hpp"

namespace envelkit {

// The classification families: L1..L4 in dimension 3, M1..M14 in dimension 4.
enum class Family {
    L1, L2, L3, L4,
    M1, M2, M3, M4, M5, M6, M7, M8, M9, M10, M11, M12, M13, M14,
};

std::string family_name(Family f);
std::size_t family_param_count(Family f);
std::size_t family_dim(Family f);

struct CatalogId {
    Family family;
    std::vector<Scalar> params; // 0..2 entries, in the id's field
    FieldTag field;

    std::string str() const; // "M7[0,2]", "L4[-1]", "M9[3]@F5", "M2"
    static CatalogId parse(const std::string& text);

    bool operator==(const CatalogId& o) const {
        return family == o.family && params == o.params && field == o.field;
    }
};

struct GroupTag {
    int value = 0; // 1..6
    bool operator==(const GroupTag& o) const { return value == o.value; }
};

// Builds the table algebra; validates parameter and characteristic
// constraints and the Jacobi identity, and stamps provenance.
LieAlgebra construct(const CatalogId& id);

enum class IsoResult { Isomorphic, NotIsomorphic, Undecided };

// The isomorphism column of the tables, decided exactly over Q and F_p.
IsoResult iso_within_family(const CatalogId& a, const CatalogId& b);

// Placement of a 4-dimensional solvable algebra into the six groups.
GroupTag group_of(const LieAlgebra& L);

// The group each catalog row belongs to by the tables (dimension 4 only).
std::optional<GroupTag> table_group(const CatalogId& id);

// All valid ids with parameters drawn from the grid. The standalone rows
// M13[0] (char != 2) and M10[0] (char 2) are always included.
std::vector<CatalogId> enumerate_catalog(const FieldTag& field,
                                         const std::vector<Scalar>& grid);

// Identifies a 3-dimensional solvable algebra as L1, L2, L3[a] or L4[a]
// (parameter up to the family's equivalence).
std::optional<CatalogId> recognize_3dim(const LieAlgebra& L);

} // namespace envelkit

#endif
