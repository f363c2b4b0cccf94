#include "symprove/symbol.hpp"

#include "symprove/error.hpp"

namespace symprove {

std::string_view to_string(SymbolKind kind) {
  switch (kind) {
  case SymbolKind::derivative:
    return "derivative";
  case SymbolKind::rk_coefficient:
    return "rk-coefficient";
  case SymbolKind::parameter:
    return "parameter";
  }
  return "?";
}

SymbolId SymbolTable::add(std::string name, SymbolKind kind) {
  if (by_name_.count(name) != 0) {
    throw Error("symbol '" + name + "' is already declared");
  }
  auto id = static_cast<SymbolId>(symbols_.size());
  by_name_.emplace(name, id);
  symbols_.push_back(Symbol{id, std::move(name), kind});
  return id;
}

SymbolId SymbolTable::intern(std::string_view name, SymbolKind kind) {
  if (auto id = find(name)) {
    return *id;
  }
  return add(std::string(name), kind);
}

std::optional<SymbolId> SymbolTable::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) {
    return std::nullopt;
  }
  return it->second;
}

SymbolId SymbolTable::id_of(std::string_view name) const {
  if (auto id = find(name)) {
    return *id;
  }
  throw UnknownSymbolError(std::string(name), "unknown symbol '" + std::string(name) + "'");
}

const Symbol& SymbolTable::at(SymbolId id) const {
  if (id >= symbols_.size()) {
    throw UnknownSymbolError("#" + std::to_string(id), "symbol id out of range");
  }
  return symbols_[id];
}

std::vector<SymbolId> SymbolTable::of_kind(SymbolKind kind) const {
  std::vector<SymbolId> out;
  for (const auto& s : symbols_) {
    if (s.kind == kind) {
      out.push_back(s.id);
    }
  }
  return out;
}

} // namespace symprove
