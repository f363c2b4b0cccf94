#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace symprove {

using SymbolId = std::uint32_t;

enum class SymbolKind { derivative, rk_coefficient, parameter };

std::string_view to_string(SymbolKind kind);

struct Symbol {
  SymbolId id = 0;
  std::string name;
  SymbolKind kind = SymbolKind::parameter;
};

/// Append-only registry of named symbols. Ids are dense and assigned in
/// creation order; that order doubles as the internal parameter order.
class SymbolTable {
public:
  /// Throws Error if the name is already taken.
  SymbolId add(std::string name, SymbolKind kind);

  /// Returns the existing id for `name`, or registers it.
  SymbolId intern(std::string_view name, SymbolKind kind);

  std::optional<SymbolId> find(std::string_view name) const;
  SymbolId id_of(std::string_view name) const;  // throws UnknownSymbolError
  const Symbol& at(SymbolId id) const;
  const std::string& name(SymbolId id) const { return at(id).name; }
  std::size_t size() const noexcept { return symbols_.size(); }

  std::vector<SymbolId> of_kind(SymbolKind kind) const;

private:
  std::vector<Symbol> symbols_;
  std::unordered_map<std::string, SymbolId> by_name_;
};

using SymbolTablePtr = std::shared_ptr<SymbolTable>;

} // namespace symprove
