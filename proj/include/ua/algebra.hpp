#pragma once

// Finite algebras with total operation tables, terms over a signature, and
// the exhaustive-search primitives everything else is built on: homomorphism
// enumeration, subuniverse generation and enumeration, direct products,
// isomorphism search, and the free-algebra oracle.
//
// Universes are always 0..size-1; labels are display-only metadata.

#include <optional>
#include <string>
#include <vector>

#include "ua/common.hpp"

namespace ua {

struct OpSym {
  std::string name;
  int arity = 0;
  bool operator==(const OpSym&) const = default;
};

class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<OpSym> ops);

  const std::vector<OpSym>& ops() const { return ops_; }
  int index_of(const std::string& name) const;  // -1 if absent
  int arity(int op) const { return ops_[static_cast<size_t>(op)].arity; }
  const std::string& name(int op) const { return ops_[static_cast<size_t>(op)].name; }
  size_t count() const { return ops_.size(); }
  bool operator==(const Signature&) const = default;

 private:
  std::vector<OpSym> ops_;
};

class FiniteAlgebra {
 public:
  // tables[k] has length size^arity(k), row-major in the argument tuple.
  FiniteAlgebra(Signature sig, int size, std::vector<std::vector<Element>> tables,
                std::vector<std::string> labels = {});

  const Signature& signature() const { return sig_; }
  int size() const { return size_; }
  const std::vector<Element>& table(int op) const { return tables_[static_cast<size_t>(op)]; }
  const std::vector<std::string>& labels() const { return labels_; }

  Element apply(int op, std::span<const Element> args) const {
    return tables_[static_cast<size_t>(op)][static_cast<size_t>(tuple_index(size_, args))];
  }
  Element constant(int op) const { return tables_[static_cast<size_t>(op)][0]; }

  std::string label(Element e) const;

  bool operator==(const FiniteAlgebra& o) const {
    return sig_ == o.sig_ && size_ == o.size_ && tables_ == o.tables_;
  }

 private:
  Signature sig_;
  int size_;
  std::vector<std::vector<Element>> tables_;
  std::vector<std::string> labels_;
};

// One-element algebra over `sig`; every operation collapses to element 0.
FiniteAlgebra trivial_algebra(const Signature& sig);

// ---------------------------------------------------------------------------
// Terms

struct TermNode {
  int var = -1;                 // >= 0 for a variable leaf
  std::string op;               // op name for an application node
  std::vector<TermNode> args;

  static TermNode v(int index);
  static TermNode ap(std::string op, std::vector<TermNode> args = {});
  bool is_var() const { return var >= 0; }
  bool operator==(const TermNode&) const = default;
};

struct Term {
  int arity = 0;     // number of available variables
  TermNode root;
  bool operator==(const Term&) const = default;
};

// Throws ValidationError on unknown ops, arity mismatches, var out of range.
void validate_term(const Signature& sig, const Term& t);

Element eval_term(const FiniteAlgebra& alg, const Term& t, std::span<const Element> args);

// Full value table of the term function t^alg, length size^arity.
std::vector<Element> term_table(const FiniteAlgebra& alg, const Term& t);

std::string term_to_string(const Term& t);

// ---------------------------------------------------------------------------
// Homomorphisms

using HomMap = std::vector<Element>;

bool is_homomorphism(const FiniteAlgebra& dom, const FiniteAlgebra& cod, std::span<const Element> map);

// All homomorphisms dom -> cod, in lexicographic order of the map array.
// `partial`, when given, pins selected images (-1 = unconstrained).
std::vector<HomMap> enumerate_homs(const FiniteAlgebra& dom, const FiniteAlgebra& cod,
                                   const Caps& caps = {},
                                   const std::vector<Element>* partial = nullptr);

HomMap compose(const HomMap& first, const HomMap& then);

// ---------------------------------------------------------------------------
// Subuniverses

// How each element of a generated subuniverse arose: from the seed, or as
// op(args) with args referring to earlier elements of the result sequence.
struct Derivation {
  int op = -1;                    // -1: seed element
  std::vector<int> arg_positions; // positions into the generation sequence
};

// Least subuniverse containing `seed` and all constants. Returns elements in
// generation order (seed first, ascending); `derivs` parallels the result.
std::vector<Element> subalgebra_generate(const FiniteAlgebra& alg, std::span<const Element> seed,
                                         std::vector<Derivation>* derivs = nullptr);

// All subuniverses, sorted by size then lexicographically as element lists.
// Includes the empty set only when the signature has no nullary op.
// Requires alg.size() <= 64.
std::vector<std::vector<Element>> enumerate_subuniverses(const FiniteAlgebra& alg,
                                                         const Caps& caps = {});

// The algebra induced on a subuniverse, elements renumbered in given order.
FiniteAlgebra subalgebra(const FiniteAlgebra& alg, std::span<const Element> universe);

// ---------------------------------------------------------------------------
// Products, isomorphism, free algebras

// Componentwise product; element encoding is mixed-radix with the first
// factor as the most significant digit (pair case: p = a * size_b + b).
// `sig` must match every factor and decides the result signature when the
// factor list is empty (empty product = trivial algebra).
FiniteAlgebra direct_product(const Signature& sig, std::span<const FiniteAlgebra> factors);

// A bijective homomorphism A -> B, or nullopt. The inverse of a bijective
// homomorphism between finite algebras is automatically a homomorphism.
std::optional<HomMap> find_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                       const Caps& caps = {});

// Short generating sequence found greedily (largest closure gain first).
std::vector<Element> greedy_generators(const FiniteAlgebra& alg);

struct FreeAlgebra {
  FiniteAlgebra algebra;
  std::vector<Element> generators;
};

// The free algebra on n generators in the prevariety generated by M,
// computed as the subalgebra of M^(M^n) generated by the n projections.
FreeAlgebra free_algebra_oracle(const FiniteAlgebra& m, int n, const Caps& caps = {});

}  // namespace ua
