#pragma once

#include <optional>
#include <string_view>

#include "socle/presentation.hpp"

namespace socle {

/// Parsed presentation file: an optional field line, an optional base block,
/// and any number of algebra blocks over that base or over the field.
///
///   field Q                                  # or: field Fp 32003
///   base R { vars t; relations t^2 }
///   algebra A over R { mode graded; vars x, y; relations x^2, x*y }
///
/// '#' starts a comment. The field line, when present, must come first; the
/// base block must precede the algebras that name it. Entries inside a block
/// are mode / vars / relations, separated by semicolons.
struct PresentationFile {
  Field field = Field::rationals();
  BaseDescriptor base = BaseDescriptor::prime_field(Field::rationals());
  std::string base_name;  // empty when no base block was given
  std::vector<AlgebraPresentation> algebras;
};

/// field_override, when set, replaces the declared coefficient field before
/// any ring is built.
PresentationFile parse_presentation_file(std::string_view text,
                                         std::optional<Field> field_override = std::nullopt);

const AlgebraPresentation* find_algebra(const PresentationFile& f, const std::string& name);
const AlgebraPresentation& require_algebra(const PresentationFile& f, const std::string& name);

}  // namespace socle
