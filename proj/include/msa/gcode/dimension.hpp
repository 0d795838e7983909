#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace msa::gcode {

/// The six pragmatic control dimensions. Declaration order is the canonical
/// directive order.
enum class Dimension : std::size_t {
  Tone,
  Position,
  Closure,
  ContextAlignment,
  LogicalFlow,
  AffectiveTension,
};

inline constexpr std::size_t kDimensionCount = 6;

inline constexpr std::array<Dimension, kDimensionCount> kAllDimensions = {
    Dimension::Tone,        Dimension::Position,    Dimension::Closure,
    Dimension::ContextAlignment, Dimension::LogicalFlow, Dimension::AffectiveTension,
};

constexpr std::size_t index_of(Dimension d) noexcept { return static_cast<std::size_t>(d); }

/// Surface prefix: T, P, C, CTX, L, E.
std::string_view tag_prefix(Dimension d) noexcept;
/// Key used in the keyed-object JSON form: tone, position, ...
std::string_view object_key(Dimension d) noexcept;
/// Upper-case display name: TONE, POSITION, ...
std::string_view display_name(Dimension d) noexcept;

/// Case-insensitive lookups; nullopt when unknown.
std::optional<Dimension> dimension_from_prefix(std::string_view prefix);
std::optional<Dimension> dimension_from_key(std::string_view key);

}  // namespace msa::gcode
