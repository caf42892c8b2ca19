// Formula trees for the basiq calculus: atoms, perp-atoms, six binary
// connectives, De Morgan duality, qubit patterns and Bell-pair formulas.
#pragma once

#include <cassert>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace basiq {

// Binary connectives. With/Par/Ent introduce on the right of a sequent,
// Or/Times/DualEnt on the left.
enum class Conn { With, Or, Times, Par, Ent, DualEnt };

inline constexpr const char* conn_token(Conn c) {
  switch (c) {
    case Conn::With: return "&";
    case Conn::Or: return "v";
    case Conn::Times: return "*";
    case Conn::Par: return "%";
    case Conn::Ent: return "@";
    case Conn::DualEnt: return "$";
  }
  return "?";
}

// Immutable formula value; copies share structure.
class Formula {
 public:
  enum class Kind { Atom, PerpAtom, Bin };

  static Formula atom(std::string name) {
    return Formula(std::make_shared<const Node>(Kind::Atom, std::move(name)));
  }
  static Formula perp_atom(std::string name) {
    return Formula(std::make_shared<const Node>(Kind::PerpAtom, std::move(name)));
  }
  static Formula bin(Conn op, Formula l, Formula r) {
    return Formula(std::make_shared<const Node>(op, std::move(l), std::move(r)));
  }

  Kind kind() const { return node_->kind; }
  bool is_atom() const { return node_->kind == Kind::Atom; }
  bool is_perp_atom() const { return node_->kind == Kind::PerpAtom; }
  bool is_bin() const { return node_->kind == Kind::Bin; }
  bool is_bin(Conn op) const { return is_bin() && node_->op == op; }

  // Atom name (valid for Atom/PerpAtom nodes).
  const std::string& name() const {
    assert(!is_bin());
    return node_->name;
  }
  Conn conn() const {
    assert(is_bin());
    return node_->op;
  }
  const Formula& left() const {
    assert(is_bin());
    return *node_->left;
  }
  const Formula& right() const {
    assert(is_bin());
    return *node_->right;
  }

  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case Kind::Atom:
      case Kind::PerpAtom:
        return a.name() == b.name();
      case Kind::Bin:
        return a.conn() == b.conn() && a.left() == b.left() && a.right() == b.right();
    }
    return false;
  }
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

  // Canonical ASCII rendering; doubles as a total order key.
  // Atoms print bare, perp-atoms with a trailing '^', binaries fully
  // parenthesised with single spaces: "(A & A^)".
  std::string text() const {
    std::string out;
    render(out);
    return out;
  }

  size_t depth() const {
    if (!is_bin()) return 1;
    return 1 + std::max(left().depth(), right().depth());
  }

 private:
  struct Node {
    Kind kind;
    std::string name;  // Atom / PerpAtom
    Conn op = Conn::With;
    std::shared_ptr<const Formula> left, right;

    Node(Kind k, std::string n) : kind(k), name(std::move(n)) {}
    Node(Conn o, Formula l, Formula r)
        : kind(Kind::Bin),
          op(o),
          left(std::make_shared<const Formula>(std::move(l))),
          right(std::make_shared<const Formula>(std::move(r))) {}
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  void render(std::string& out) const {
    switch (kind()) {
      case Kind::Atom:
        out += name();
        break;
      case Kind::PerpAtom:
        out += name();
        out += '^';
        break;
      case Kind::Bin:
        out += '(';
        left().render(out);
        out += ' ';
        out += conn_token(conn());
        out += ' ';
        right().render(out);
        out += ')';
        break;
    }
  }

  std::shared_ptr<const Node> node_;
};

inline bool formula_less(const Formula& a, const Formula& b) { return a.text() < b.text(); }

// Flip every atom leaf (X <-> X^) while keeping all connectives in place.
inline Formula negate_atoms(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return Formula::perp_atom(f.name());
    case Formula::Kind::PerpAtom:
      return Formula::atom(f.name());
    case Formula::Kind::Bin:
      return Formula::bin(f.conn(), negate_atoms(f.left()), negate_atoms(f.right()));
  }
  return f;
}

// Involutive dual. Right connectives map to their left partners and back
// (& <-> v, % <-> *, @ <-> $). For &/v/*/% the children dualise recursively;
// for @/$ the children are mapped leaf-wise so that a qubit operand stays a
// qubit-shaped operand: dual((A & A^) @ (B & B^)) = (A^ & A) $ (B^ & B).
inline Formula dual(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return Formula::perp_atom(f.name());
    case Formula::Kind::PerpAtom:
      return Formula::atom(f.name());
    case Formula::Kind::Bin:
      switch (f.conn()) {
        case Conn::With: return Formula::bin(Conn::Or, dual(f.left()), dual(f.right()));
        case Conn::Or: return Formula::bin(Conn::With, dual(f.left()), dual(f.right()));
        case Conn::Times: return Formula::bin(Conn::Par, dual(f.left()), dual(f.right()));
        case Conn::Par: return Formula::bin(Conn::Times, dual(f.left()), dual(f.right()));
        case Conn::Ent:
          return Formula::bin(Conn::DualEnt, negate_atoms(f.left()), negate_atoms(f.right()));
        case Conn::DualEnt:
          return Formula::bin(Conn::Ent, negate_atoms(f.left()), negate_atoms(f.right()));
      }
  }
  return f;
}

// Qubit pattern: (X & X^) for an atom X.
inline Formula mk_qubit(std::string_view atom) {
  std::string n(atom);
  return Formula::bin(Conn::With, Formula::atom(n), Formula::perp_atom(n));
}

// Returns the atom name when f is exactly (X & X^), else nullopt.
inline std::optional<std::string> match_qubit_pattern(const Formula& f) {
  if (!f.is_bin(Conn::With)) return std::nullopt;
  const Formula& l = f.left();
  const Formula& r = f.right();
  if (l.is_atom() && r.is_perp_atom() && l.name() == r.name()) return l.name();
  return std::nullopt;
}

// Shapes of the two Bell-pair formula families over atoms A, B.
enum class BellFormulaKind { PhiLike, PsiLike };

// PhiLike: (A % B) & (A^ % B^); PsiLike: (A % B^) & (A^ % B).
inline Formula bell_formula(BellFormulaKind kind, std::string_view a = "A",
                            std::string_view b = "B") {
  Formula A = Formula::atom(std::string(a));
  Formula Ap = Formula::perp_atom(std::string(a));
  Formula B = Formula::atom(std::string(b));
  Formula Bp = Formula::perp_atom(std::string(b));
  if (kind == BellFormulaKind::PhiLike) {
    return Formula::bin(Conn::With, Formula::bin(Conn::Par, A, B),
                        Formula::bin(Conn::Par, Ap, Bp));
  }
  return Formula::bin(Conn::With, Formula::bin(Conn::Par, A, Bp),
                      Formula::bin(Conn::Par, Ap, B));
}

// The entangled-pair formula (Q_a @ Q_b).
inline Formula mk_ent_pair(std::string_view a = "A", std::string_view b = "B") {
  return Formula::bin(Conn::Ent, mk_qubit(a), mk_qubit(b));
}

// Structural walker: negation only ever lives on atom leaves (guaranteed by
// construction) and every atom name is a well-formed identifier.
inline bool well_formed(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::PerpAtom: {
      const std::string& n = f.name();
      if (n.empty() || n[0] < 'A' || n[0] > 'Z') return false;
      for (char c : n) {
        bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
        if (!ok) return false;
      }
      return true;
    }
    case Formula::Kind::Bin:
      return well_formed(f.left()) && well_formed(f.right());
  }
  return false;
}

// A sequent: antecedent |- succedent, both ordered lists.
struct Sequent {
  std::vector<Formula> ante;
  std::vector<Formula> succ;

  friend bool operator==(const Sequent& a, const Sequent& b) {
    return a.ante == b.ante && a.succ == b.succ;
  }
  friend bool operator!=(const Sequent& a, const Sequent& b) { return !(a == b); }
};

}  // namespace basiq
