#pragma once

// Rotor and versor groups generated by rank-3 root systems under the
// geometric product, and the rank-4 root systems they induce.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxspin/clifford.hpp"
#include "coxspin/coxeter.hpp"
#include "coxspin/quaternion.hpp"

namespace coxspin {

struct Versor {
    Multivector3 value;
    Parity parity;
};

struct VersorGroup {
    std::vector<Versor> elements;   // sorted by MultivectorLess
    std::vector<Matrix3> induced;   // induced[i] is the map of elements[i]

    std::size_t size() const { return elements.size(); }
    std::size_t count(Parity p) const;
    /// Distinct induced matrices, sorted lexicographically.
    std::vector<Matrix3> transformations() const;
};

struct SpinorSet {
    std::vector<Multivector3> rotors;  // sorted by MultivectorLess

    std::size_t size() const { return rotors.size(); }
    bool contains(const Multivector3& r) const;
    /// Images under spinor_to_quaternion, sorted.
    std::vector<QuaternionF> quaternions() const;
};

/// Smallest set containing 1 and closed under right multiplication by the generators.
std::vector<Multivector3> multiplicative_closure(const std::vector<Multivector3>& generators,
                                                 std::size_t cap = default_closure_cap);

/// Rescales to |A|² = 1; throws NotInField if the needed root is not in the field.
Multivector3 normalize_versor(const Multivector3& a);

/// Closure of {α β : α, β ∈ Φ}.
SpinorSet generate_rotors(const RootSystem3& rs);
/// The pairwise products α β alone, without further closure.
std::vector<Multivector3> pairwise_rotors(const RootSystem3& rs);
/// Closure of {α1α2, α2α3} and their reverses.
SpinorSet generate_from_two(const SimpleRoots& simple, std::size_t cap = default_closure_cap);

VersorGroup generate_versor_group(const RootSystem3& rs, std::size_t cap = default_closure_cap);

/// Smallest k ≥ 1 with m^k = 1; throws std::runtime_error past the cap.
int matrix_order(const Matrix3& m, int cap = 120);

struct VersorCensus {
    std::size_t versors = 0;
    std::size_t even_versors = 0;
    std::size_t odd_versors = 0;
    std::size_t transformations = 0;
    std::size_t rotations = 0;        // even transformations, identity included
    std::size_t reflections = 0;      // odd, fixing a plane
    std::size_t rotoinversions = 0;   // odd, not a reflection
    std::size_t odd_transformations = 0;
    std::map<int, std::size_t> rotations_by_order;
    bool identity = false;
    bool central_inversion = false;
};

VersorCensus classify_versors(const VersorGroup& vg);

struct PureQuaternionVerdict {
    bool holds = false;              // every Hodge-dual root is a spinor
    bool central_inversion = false;  // −identity is induced by the versor group
    bool biconditional = false;      // holds == central_inversion
    /// Dual root missing from the spinors, or the versor inducing −identity.
    std::optional<Multivector3> witness;
};

PureQuaternionVerdict check_pure_quaternion_subrootsystem(const RootSystem3& rs, const SpinorSet& spinors,
                                                          const VersorGroup& versors);
PureQuaternionVerdict check_pure_quaternion_subrootsystem(const RootSystem3& rs);

/// Label of the rank-4 system induced by each rank-3 group: "A1x4", "D4", "F4", "H4".
std::string rank4_label(CoxeterGroup g);
/// Binary polyhedral group name: "Q", "2T", "2O", "2I".
std::string binary_group_name(CoxeterGroup g);
/// The catalog union the spinors of g should equal.
std::vector<QuaternionF> expected_catalog(CoxeterGroup g);

/// Thrown when an induced rank-4 set fails the root-system axioms.
class RootSystemViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Spinors as quaternion 4-vectors, verified under qinner.
RootSystem4 induce_rank4(const SpinorSet& ss, const std::string& group_label);

struct ReflectionEquivalence {
    QuaternionF quaternionic;  // −x v̄ x with x ↔ Ia and v ↔ Iv
    QuaternionF geometric;     // image of I·reflect(v, a)
    bool equal = false;
};

/// Checks that quaternionic reflection −x v̄ x is the Hodge-dual image of −a v a.
ReflectionEquivalence quaternion_reflection_equivalence(const Vector3& v, const Vector3& a);

}  // namespace coxspin
