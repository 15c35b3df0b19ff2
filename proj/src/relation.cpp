#include "tautring/relation.hpp"

#include <array>
#include <utility>

namespace tautring {

namespace {
constexpr std::array<std::pair<Family, const char*>, 9> kNames = {{
    {Family::Faber, "faber"},
    {Family::Sq2, "sq2"},
    {Family::Sq3, "sq3"},
    {Family::Thm4, "thm4"},
    {Family::Prop3, "prop3"},
    {Family::Fz, "fz"},
    {Family::FzReindexed, "fz-reindexed"},
    {Family::Expanded, "expanded"},
    {Family::GSigma, "gsigma"},
}};
}  // namespace

std::string family_name(Family f) {
  for (const auto& [k, v] : kNames)
    if (k == f) return v;
  return "unknown";
}

std::optional<Family> parse_family(const std::string& name) {
  for (const auto& [k, v] : kNames)
    if (name == v) return k;
  return std::nullopt;
}

}  // namespace tautring
