#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "caylab/common.hpp"

namespace caylab {

enum class Family { FreeAbelian, Heisenberg3, FreeGroup, DirectProduct };

struct FamilySpec {
    Family family = Family::FreeAbelian;
    int param = 1;  // rank d (FreeAbelian) or letter count k (FreeGroup)
    std::vector<FamilySpec> parts;  // DirectProduct components
};

// Group element in the owning family's canonical form. Payload layout:
//   FreeAbelian(d) : d coordinates
//   Heisenberg3    : (a, b, c) of the unitriangular matrix [[1,a,c],[0,1,b],[0,0,1]]
//   FreeGroup(k)   : word length, then freely reduced letters in +-1..+-k
//   DirectProduct  : component payloads concatenated
struct Element {
    std::uint64_t model_tag = 0;
    std::vector<std::int64_t> payload;
    friend bool operator==(const Element&, const Element&) = default;
};

class GroupModel {
public:
    explicit GroupModel(FamilySpec spec);

    const FamilySpec& spec() const { return spec_; }
    Family family() const { return spec_.family; }
    std::uint64_t tag() const { return tag_; }
    const std::string& name() const { return name_; }

    Element identity() const;
    Element multiply(const Element& g, const Element& h) const;
    Element inverse(const Element& g) const;
    bool is_identity(const Element& g) const;

    // Injective, portable byte encoding: little-endian int32 tuples for the
    // matrix/vector families, a length-prefixed signed letter sequence for
    // free factors. Coordinates outside int32 range are rejected.
    std::string canonical_code(const Element& g) const;

    // Image under the abelianization homomorphism (used by the minimality
    // certificate; for FreeAbelian it is the identity map).
    std::vector<std::int64_t> abelianized(const Element& g) const;
    int abelianized_rank() const;

    // Element constructors for config input.
    Element from_coords(const std::vector<std::int64_t>& coords) const;  // FreeAbelian / Heisenberg3
    Element from_word(const std::string& word) const;                    // FreeGroup, "a".."z" with uppercase = inverse
    Element from_parts(const std::vector<Element>& parts) const;         // DirectProduct

    // DirectProduct components (empty for the other families).
    const std::vector<std::unique_ptr<GroupModel>>& components() const { return parts_; }

private:
    void check_tag(const Element& g) const;

    FamilySpec spec_;
    std::uint64_t tag_ = 0;
    std::string name_;
    std::vector<std::unique_ptr<GroupModel>> parts_;
};

using GroupPtr = std::shared_ptr<const GroupModel>;

GroupPtr make_group(FamilySpec spec);

struct GeneratorSet {
    std::vector<Element> elements;   // order defines the edge labels
    std::vector<int> inverse_index;  // position of g^{-1} for each g
    bool symmetric = false;

    int degree() const { return static_cast<int>(elements.size()); }
};

// Union with inverses, identity dropped, duplicates removed. Errors if the
// result is empty.
GeneratorSet symmetrize(const GroupModel& G, const std::vector<Element>& raw);

// Standard generating sets: +-e_i (FreeAbelian), {a,a^-1,b,b^-1} (Heisenberg3),
// the letters (FreeGroup), the union of component standards (DirectProduct).
GeneratorSet standard_generators(const GroupModel& G);

struct MinimalityWitness {
    int generator = -1;           // index into S of the redundant generator
    std::vector<int> word;        // indices into S (never the generator or its inverse)
};

struct MinimalityVerdict {
    enum class Kind { NotMinimal, MinimalCertified, MinimalUpToRadius };
    Kind kind = Kind::MinimalUpToRadius;
    int radius = 0;
    std::optional<MinimalityWitness> witness;
    std::string detail;

    bool certified_minimal() const { return kind == Kind::MinimalCertified; }
};

// A generator g is redundant when g lies in the subgroup generated by
// S \ {g, g^-1}. Certification is exact where the abelianization decides it
// (always for FreeAbelian, letter counting for FreeGroup); otherwise the
// verdict is bounded by the certification radius.
MinimalityVerdict check_minimality(const GroupModel& G, const GeneratorSet& S, int certification_radius);

// Evaluates a minimality witness word; used to re-verify NotMinimal verdicts.
Element evaluate_word(const GroupModel& G, const GeneratorSet& S, const std::vector<int>& word);

// Integer lattice membership: is target in the lattice spanned by the basis
// columns? Returns coefficients when it is.
std::optional<std::vector<std::int64_t>> lattice_membership(
    const std::vector<std::vector<std::int64_t>>& basis, const std::vector<std::int64_t>& target);

// Generator-image map inducing a homomorphism onto a supported target family.
// Images must cover every generator and respect inverses; identity images are
// dropped from the induced set.
std::pair<GroupPtr, GeneratorSet> quotient_hom(const GroupModel& source, const GeneratorSet& S,
                                               const GroupPtr& target, const std::vector<Element>& images);

}  // namespace caylab
