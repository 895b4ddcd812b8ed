#include "invforms/lattice_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "invforms/errors.hpp"

namespace invforms {

namespace {

using nlohmann::json;

std::shared_ptr<const Ambient> make_ambient(const LatticeKey& key, const LatticeLimits& limits) {
  return key.family == LatticeFamily::C ? Ambient::symplectic(key.param, key.k, limits.ambient_cap)
                                        : Ambient::sl_tensor(key.param, key.k, limits.ambient_cap);
}

Integer expected_rank(const LatticeKey& key) {
  return key.family == LatticeFamily::C ? expected_rank_C(key.param, key.k) : expected_rank_A(key.param, key.k);
}

}  // namespace

std::string to_string(const LatticeKey& key) {
  return std::string(key.family == LatticeFamily::C ? "C" : "A") + "-" + std::to_string(key.param) + "-" +
         std::to_string(key.k);
}

std::shared_ptr<const LatticeModule> build_lattice(const LatticeKey& key, const LatticeLimits& limits) {
  return key.family == LatticeFamily::C ? generate_weyl_lattice_C(key.param, key.k, limits)
                                        : generate_weyl_lattice_A(key.param, key.k, limits);
}

std::string serialize_lattice(const LatticeKey& key, const LatticeModule& module) {
  json rows = json::array();
  for (const auto& v : module.basis()) {
    json row = json::array();
    for (const auto& [i, c] : v.terms()) row.push_back(json::array({i, c.str()}));
    rows.push_back(std::move(row));
  }
  json gram = json::array();
  for (std::size_t a = 0; a < module.rank(); ++a) {
    const auto o = module.opposite_block(module.basis_weight(a));
    if (!o) continue;
    for (std::size_t j = 0; j < module.block_size(*o); ++j) {
      const std::size_t b = module.block_begin(*o) + j;
      const Integer g = module.gram(a, b);
      if (g != 0) gram.push_back(json::array({a, b, g.str()}));
    }
  }
  json record = {{"format", kLatticeCacheFormat},
                 {"family", key.family == LatticeFamily::C ? "C" : "A"},
                 {"param", key.param},
                 {"k", key.k},
                 {"ambient_dim", module.ambient().dimension()},
                 {"rank", module.rank()},
                 {"basis", std::move(rows)},
                 {"gram", std::move(gram)}};
  return record.dump();
}

std::shared_ptr<const LatticeModule> deserialize_lattice(const LatticeKey& key, const std::string& text,
                                                         const LatticeLimits& limits) {
  json record;
  std::size_t stated_rank = 0;
  try {
    record = json::parse(text);
    if (record.at("format").get<int>() != kLatticeCacheFormat) throw InputError("lattice record: format mismatch");
    const std::string fam = record.at("family").get<std::string>();
    if (fam != (key.family == LatticeFamily::C ? "C" : "A") || record.at("param").get<int>() != key.param ||
        record.at("k").get<int>() != key.k) {
      throw InputError("lattice record: key mismatch");
    }
    stated_rank = record.at("rank").get<std::size_t>();
  } catch (const json::exception& e) {
    throw InputError(std::string("lattice record: ") + e.what());
  }
  auto ambient = make_ambient(key, limits);
  std::vector<IntWedgeVector> rows;
  try {
    for (const auto& row : record.at("basis")) {
      IntWedgeVector v;
      for (const auto& term : row) v.add(term.at(0).get<std::size_t>(), Integer(term.at(1).get<std::string>()));
      rows.push_back(std::move(v));
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("lattice record: ") + e.what());
  } catch (const std::runtime_error& e) {
    throw InputError(std::string("lattice record: bad integer: ") + e.what());
  }
  auto module = LatticeModule::from_rows(ambient, rows, limits, false);
  if (module->rank() != expected_rank(key) || module->rank() != rows.size() ||
      module->rank() != stated_rank) {
    throw InputError("lattice record: rank mismatch");
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!(module->basis(i) == rows[i])) throw InputError("lattice record: basis is not in normal form");
  }
  std::size_t entries = 0;
  try {
    for (const auto& e : record.at("gram")) {
      const auto a = e.at(0).get<std::size_t>();
      const auto b = e.at(1).get<std::size_t>();
      if (a >= module->rank() || b >= module->rank() || module->gram(a, b) != Integer(e.at(2).get<std::string>())) {
        throw InputError("lattice record: Gram entry mismatch");
      }
      ++entries;
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("lattice record: ") + e.what());
  } catch (const std::runtime_error& e) {
    throw InputError(std::string("lattice record: bad integer: ") + e.what());
  }
  std::size_t nonzero = 0;
  for (std::size_t a = 0; a < module->rank(); ++a) {
    const auto o = module->opposite_block(module->basis_weight(a));
    if (!o) continue;
    for (std::size_t j = 0; j < module->block_size(*o); ++j) nonzero += module->gram(a, module->block_begin(*o) + j) != 0;
  }
  if (nonzero != entries) throw InputError("lattice record: Gram entry count mismatch");
  return module;
}

LatticeCache::LatticeCache(std::optional<std::filesystem::path> directory) : directory_(std::move(directory)) {}

LatticeCache& LatticeCache::global() {
  static LatticeCache cache = [] {
    const char* dir = std::getenv("FORMS_CACHE_DIR");
    return LatticeCache(dir && *dir ? std::optional<std::filesystem::path>(dir) : std::nullopt);
  }();
  return cache;
}

std::filesystem::path LatticeCache::record_path(const LatticeKey& key) const {
  if (!directory_) throw InputError("lattice cache has no directory");
  return *directory_ / ("lattice-v" + std::to_string(kLatticeCacheFormat) + "-" + to_string(key) + ".json");
}

std::shared_ptr<const LatticeModule> LatticeCache::get(const LatticeKey& key, const LatticeLimits& limits) {
  std::lock_guard lock(mutex_);
  if (auto it = memory_.find(key); it != memory_.end()) return it->second;
  std::shared_ptr<const LatticeModule> module;
  if (directory_) {
    const auto path = record_path(key);
    if (std::ifstream in(path); in) {
      std::stringstream text;
      text << in.rdbuf();
      try {
        module = deserialize_lattice(key, text.str(), limits);
      } catch (const InputError&) {
        module.reset();  // stale or damaged record; rebuild below
      }
    }
  }
  if (!module) {
    module = build_lattice(key, limits);
    if (directory_) {
      std::error_code ec;
      std::filesystem::create_directories(*directory_, ec);
      const auto path = record_path(key);
      const auto tmp = path.string() + ".tmp";
      {
        std::ofstream out(tmp);
        out << serialize_lattice(key, *module);
      }
      std::filesystem::rename(tmp, path, ec);
    }
  }
  memory_.emplace(key, module);
  return module;
}

}  // namespace invforms
