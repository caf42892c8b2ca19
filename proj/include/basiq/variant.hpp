// The cube of logics: the base calculus B and its seven extensions obtained
// by enabling structural rules (S) and/or passive contexts on the left (L)
// and right (R) of the active formulas.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace basiq {

struct LogicVariant {
  bool structural = false;  // S: contraction and weakening available
  bool left = false;        // L: passive context allowed beside left actives
  bool right = false;       // R: passive context allowed beside right actives

  constexpr bool operator==(const LogicVariant&) const = default;
};

inline constexpr LogicVariant kVariantB{false, false, false};
inline constexpr LogicVariant kVariantBL{false, true, false};
inline constexpr LogicVariant kVariantBR{false, false, true};
inline constexpr LogicVariant kVariantBRL{false, true, true};
inline constexpr LogicVariant kVariantBS{true, false, false};
inline constexpr LogicVariant kVariantBSL{true, true, false};
inline constexpr LogicVariant kVariantBSR{true, false, true};
inline constexpr LogicVariant kVariantBSRL{true, true, true};

inline constexpr std::array<LogicVariant, 8> kAllVariants{
    kVariantB,  kVariantBL,  kVariantBR,  kVariantBRL,
    kVariantBS, kVariantBSL, kVariantBSR, kVariantBSRL,
};

inline std::string variant_name(LogicVariant v) {
  std::string out = "B";
  if (v.structural) out += 'S';
  if (v.right) out += 'R';
  if (v.left) out += 'L';
  return out;
}

// Accepts the canonical names in any flag order after the leading B
// (e.g. "BRL" and "BLR" both denote the linear variant).
inline std::optional<LogicVariant> parse_variant(std::string_view name) {
  if (name.empty() || (name[0] != 'B' && name[0] != 'b')) return std::nullopt;
  LogicVariant v;
  for (char c : name.substr(1)) {
    switch (c) {
      case 'S': case 's':
        if (v.structural) return std::nullopt;
        v.structural = true;
        break;
      case 'L': case 'l':
        if (v.left) return std::nullopt;
        v.left = true;
        break;
      case 'R': case 'r':
        if (v.right) return std::nullopt;
        v.right = true;
        break;
      default:
        return std::nullopt;
    }
  }
  return v;
}

// One-line description used by the CLI's variant listing.
inline std::string variant_description(LogicVariant v) {
  if (v == kVariantB) return "basic logic: visibility, no structural rules";
  if (v == kVariantBL) return "passive contexts on the left";
  if (v == kVariantBR) return "passive contexts on the right";
  if (v == kVariantBRL) return "linear flavour: contexts on both sides";
  if (v == kVariantBS) return "quantum flavour: structural rules, full visibility";
  if (v == kVariantBSL) return "intuitionistic flavour";
  if (v == kVariantBSR) return "paraconsistent flavour";
  return "classical flavour: structural rules and both contexts";
}

}  // namespace basiq
