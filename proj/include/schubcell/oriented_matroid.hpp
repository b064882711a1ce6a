#pragma once

#include "schubcell/linear.hpp"
#include "schubcell/sign_vector.hpp"

#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace schubcell {

struct Flat {
  CoordSet members = 0;
  std::size_t rank = 0;

  friend bool operator==(const Flat&, const Flat&) = default;
};

/**
 * An oriented matroid given by its covector set. The derived data (flats,
 * ranks, cocircuits, topes) is computed once at construction; the object is
 * immutable afterwards.
 */
class OrientedMatroid {
 public:
  OrientedMatroid() = default;

  /// Takes any covector list (duplicates allowed). Does not validate the axioms;
  /// use check_axioms for that.
  static OrientedMatroid from_covectors(std::size_t ground_size, std::vector<SignVector> covectors);

  std::size_t ground_size() const { return n_; }

  /// Sorted by lex_less.
  const std::vector<SignVector>& covectors() const { return covectors_; }
  const std::vector<SignVector>& cocircuits() const { return cocircuits_; }
  const std::vector<SignVector>& topes() const { return topes_; }

  /// Sorted by (rank, members).
  const std::vector<Flat>& flats() const { return flats_; }

  CoordSet loops() const { return flats_.empty() ? 0 : flats_.front().members; }
  std::size_t rank() const { return flats_.empty() ? 0 : flats_.back().rank; }

  bool is_covector(SignVector x) const { return lookup_.count(x) != 0; }
  bool is_flat(CoordSet f) const { return flat_rank_.count(f) != 0; }
  bool is_tope(SignVector x) const;
  /// Rank of a flat; throws std::domain_error if `f` is not a flat.
  std::size_t rank_of(CoordSet f) const;

 private:
  std::size_t n_ = 0;
  std::vector<SignVector> covectors_;
  std::vector<SignVector> cocircuits_;
  std::vector<SignVector> topes_;
  std::vector<Flat> flats_;
  std::unordered_set<SignVector, SignVectorHash> lookup_;
  std::unordered_map<CoordSet, std::size_t> flat_rank_;
};

struct BuildOptions {
  /// Inputs with more elements are refused with GuardrailError.
  std::size_t ground_limit = kDefaultGroundLimit;
};

/**
 * The oriented matroid {s(v) : v in V}.
 *
 * Cocircuits come from the lines V cap ker(pi_S) over all (dim V - 1)-subsets
 * S of E; every covector is then a composition of cocircuits, which a
 * worklist closes to a fixpoint.
 */
OrientedMatroid from_subspace(const Subspace& v, const BuildOptions& options = {});

/// {p : sign_feasible(V, p) has a witness}, by sweeping all 3^|E| patterns.
std::vector<SignVector> covectors_by_feasibility(const Subspace& v);

struct AxiomViolation {
  enum class Kind { MissingZero, Negation, Composition, Elimination };
  Kind kind;
  SignVector x;
  SignVector y;
  std::size_t element = 0;  // eliminated coordinate, for Kind::Elimination

  std::string describe(std::size_t n) const;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};

/**
 * Exhaustively checks the covector axioms: 0 is present, closure under
 * negation and composition, and elimination: whenever X_e = -Y_e != 0 there is
 * Z with Z_e = 0 and Z_f = (X o Y)_f for every f outside the separation set.
 */
AxiomReport check_axioms(std::size_t ground_size, const std::vector<SignVector>& covectors);

/// M|_F on the ground set F (renumbered). Throws std::domain_error if F is not a flat.
OrientedMatroid restrict(const OrientedMatroid& m, CoordSet f);

/// pi_S of every covector for an arbitrary subset S; no flat requirement.
OrientedMatroid restrict_to_subset(const OrientedMatroid& m, CoordSet s);

/// M/F on the same ground set: covectors vanishing on F. Throws if F is not a flat.
OrientedMatroid contract(const OrientedMatroid& m, CoordSet f);

OrientedMatroid reorient(const OrientedMatroid& m, CoordSet a);

/// F is a flat and 0^F +^{E \ F} is a covector. Non-flats give false.
bool is_acyclic_flat(const OrientedMatroid& m, CoordSet f);

/// The Las Vergnas face lattice elements, in the order of m.flats().
std::vector<Flat> acyclic_flats(const OrientedMatroid& m);

}  // namespace schubcell
