#include "galab/config.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace galab {

namespace {

struct IniEntry {
  std::string value;
  int line = 0;
  mutable bool used = false;
};

// section -> key -> entry
using IniData = std::map<std::string, std::map<std::string, IniEntry>>;

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

class Ini {
 public:
  Ini(const std::filesystem::path& path) : name_(path.string()) {
    std::ifstream in(path);
    if (!in) throw ConfigError(name_ + ": cannot open config file");
    std::string raw;
    std::string section;
    int line = 0;
    while (std::getline(in, raw)) {
      ++line;
      std::string text = trim(raw.substr(0, std::min(raw.find('#'), raw.find(';'))));
      if (text.empty()) continue;
      if (text.front() == '[') {
        if (text.back() != ']') fail(line, "malformed section header");
        section = trim(text.substr(1, text.size() - 2));
        if (section.empty()) fail(line, "empty section name");
        data_[section];
        continue;
      }
      const auto eq = text.find('=');
      if (eq == std::string::npos) fail(line, "expected key = value");
      const std::string key = trim(text.substr(0, eq));
      if (key.empty()) fail(line, "empty key");
      if (section.empty()) fail(line, "key outside any [section]");
      auto [it, inserted] = data_[section].emplace(key, IniEntry{trim(text.substr(eq + 1)), line});
      if (!inserted) fail(line, "duplicate key " + section + "." + key);
    }
  }

  [[noreturn]] void fail(int line, const std::string& msg) const {
    throw ConfigError(name_ + ":" + std::to_string(line) + ": " + msg);
  }

  [[noreturn]] void fail_key(const std::string& section, const std::string& key,
                             const std::string& msg) const {
    const IniEntry* e = lookup(section, key);
    if (e) fail(e->line, section + "." + key + ": " + msg);
    throw ConfigError(name_ + ": " + section + "." + key + ": " + msg);
  }

  bool has_section(const std::string& section) const { return data_.count(section) > 0; }

  const IniEntry* lookup(const std::string& section, const std::string& key) const {
    auto sit = data_.find(section);
    if (sit == data_.end()) return nullptr;
    auto kit = sit->second.find(key);
    if (kit == sit->second.end()) return nullptr;
    kit->second.used = true;
    return &kit->second;
  }

  std::string require(const std::string& section, const std::string& key) const {
    const IniEntry* e = lookup(section, key);
    if (!e) throw ConfigError(name_ + ": " + section + "." + key + ": missing required key");
    return e->value;
  }

  std::string get_string(const std::string& section, const std::string& key,
                         const std::string& fallback) const {
    const IniEntry* e = lookup(section, key);
    return e ? e->value : fallback;
  }

  double get_double(const std::string& section, const std::string& key, double fallback) const {
    const IniEntry* e = lookup(section, key);
    if (!e) return fallback;
    try {
      std::size_t pos = 0;
      const double v = std::stod(e->value, &pos);
      if (pos != e->value.size()) throw std::invalid_argument("");
      return v;
    } catch (...) {
      fail(e->line, section + "." + key + ": expected a number, got '" + e->value + "'");
    }
  }

  std::uint64_t get_u64(const std::string& section, const std::string& key,
                        std::uint64_t fallback) const {
    const IniEntry* e = lookup(section, key);
    if (!e) return fallback;
    std::uint64_t v = 0;
    const char* first = e->value.data();
    const char* last = first + e->value.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last)
      fail(e->line, section + "." + key + ": expected a non-negative integer, got '" + e->value +
                        "'");
    return v;
  }

  bool get_bool(const std::string& section, const std::string& key, bool fallback) const {
    const IniEntry* e = lookup(section, key);
    if (!e) return fallback;
    if (e->value == "true" || e->value == "1" || e->value == "yes") return true;
    if (e->value == "false" || e->value == "0" || e->value == "no") return false;
    fail(e->line, section + "." + key + ": expected true/false, got '" + e->value + "'");
  }

  std::vector<double> get_doubles(const std::string& section, const std::string& key) const {
    const IniEntry* e = lookup(section, key);
    std::vector<double> out;
    if (!e) return out;
    std::stringstream ss(e->value);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        out.push_back(std::stod(trim(item)));
      } catch (...) {
        fail(e->line, section + "." + key + ": expected comma-separated numbers");
      }
    }
    return out;
  }

  std::vector<std::uint64_t> get_u64s(const std::string& section, const std::string& key) const {
    const IniEntry* e = lookup(section, key);
    std::vector<std::uint64_t> out;
    if (!e) return out;
    std::stringstream ss(e->value);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        out.push_back(std::stoull(trim(item)));
      } catch (...) {
        fail(e->line, section + "." + key + ": expected comma-separated integers");
      }
    }
    return out;
  }

  void reject_unused() const {
    for (const auto& [section, entries] : data_) {
      for (const auto& [key, entry] : entries) {
        if (!entry.used) fail(entry.line, "unknown key " + section + "." + key);
      }
    }
  }

 private:
  std::string name_;
  IniData data_;
};

CrossoverKind crossover_from_name(const Ini& ini, const std::string& section,
                                  const std::string& name) {
  if (name == "one_point_flat") return CrossoverKind::OnePointFlat;
  if (name == "uniform_flat") return CrossoverKind::UniformFlat;
  if (name == "one_point_stream") return CrossoverKind::OnePointStream;
  if (name == "segment_aligned") return CrossoverKind::SegmentAligned;
  ini.fail_key(section, "crossover", "unknown crossover kind '" + name + "'");
}

InitMode init_from_name(const Ini& ini, const std::string& section, const std::string& name) {
  if (name == "random") return InitMode::Random;
  if (name == "homogeneous") return InitMode::Homogeneous;
  ini.fail_key(section, "init", "unknown init mode '" + name + "'");
}

OperatorConfig read_operators(const Ini& ini) {
  OperatorConfig ops;
  ops.p_m = ini.get_double("operators", "p_m", 0.0);
  ops.p_sig = ini.get_double("operators", "p_sig", 0.0);
  ops.crossover =
      crossover_from_name(ini, "operators",
                          ini.get_string("operators", "crossover", "one_point_flat"));
  ops.p_inversion = ini.get_double("operators", "p_inversion", 0.0);
  ops.p_translocation = ini.get_double("operators", "p_translocation", 0.0);
  ops.p_duplication = ini.get_double("operators", "p_duplication", 0.0);
  return ops;
}

GenomeTemplate read_genome(const Ini& ini) {
  const std::string repr = ini.get_string("genome", "representation", "flat");
  if (repr == "flat") {
    FlatTemplate tmpl;
    tmpl.length = ini.get_u64("genome", "length", 100);
    return tmpl;
  }
  if (repr == "segmented") {
    SegmentedTemplate tmpl;
    tmpl.id_width = static_cast<unsigned>(ini.get_u64("genome", "id_width", 4));
    const std::string text = ini.require("genome", "template");
    try {
      tmpl.segments = [&] {
        const GeneMap map = parse(segmented_from_text(text), tmpl.id_width);
        std::vector<Segment> segments;
        for (const ParsedSegment& ps : map.segments()) segments.push_back(ps.segment);
        return segments;
      }();
    } catch (const std::invalid_argument& e) {
      ini.fail_key("genome", "template", e.what());
    }
    if (tmpl.segments.empty())
      ini.fail_key("genome", "template", "template encodes no segments");
    return tmpl;
  }
  ini.fail_key("genome", "representation", "expected 'flat' or 'segmented', got '" + repr + "'");
}

GAConfig read_engine(const Ini& ini) {
  GAConfig cfg;
  cfg.population_size = ini.get_u64("engine", "population", 100);
  cfg.generations = ini.get_u64("engine", "generations", 50);
  cfg.survivor_fraction = ini.get_double("engine", "survivor_fraction", 0.1);
  cfg.elitist = ini.get_bool("engine", "elitist", true);
  cfg.init_mode = init_from_name(ini, "engine", ini.get_string("engine", "init", "random"));
  cfg.seed = ini.get_u64("engine", "seed", 1);
  cfg.operators = read_operators(ini);
  cfg.genome = read_genome(ini);
  return cfg;
}

LandscapeSpec read_landscape(const Ini& ini) {
  LandscapeSpec spec;
  spec.kind = ini.require("landscape", "kind");
  spec.controller = ini.get_u64("landscape", "controller", 0);
  spec.target = ini.get_u64("landscape", "target", 0);
  spec.k = static_cast<unsigned>(ini.get_u64("landscape", "K", 0));
  spec.seed = ini.get_u64("landscape", "seed", 42);
  spec.weights = ini.get_doubles("landscape", "weights");
  return spec;
}

void cross_validate(const Ini& ini, const GAConfig& engine, const LandscapeSpec& spec) {
  const bool flat_genome = std::holds_alternative<FlatTemplate>(engine.genome);
  if (spec.segmented()) {
    if (flat_genome)
      ini.fail_key("landscape", "kind", "segmented_sum needs representation = segmented");
    const auto& tmpl = std::get<SegmentedTemplate>(engine.genome);
    if (spec.weights.size() != (1ull << tmpl.id_width))
      ini.fail_key("landscape", "weights",
                   "need exactly 2^id_width = " + std::to_string(1ull << tmpl.id_width) +
                       " weights");
    return;
  }
  if (!flat_genome)
    ini.fail_key("landscape", "kind", spec.kind + " needs representation = flat");
  if (spec.kind == "second_order") {
    const auto length = std::get<FlatTemplate>(engine.genome).length;
    if (spec.controller < 1 || spec.target < 1)
      ini.fail_key("landscape", "kind", "second_order needs controller and target widths");
    if (spec.controller + spec.target != length)
      ini.fail_key("landscape", "controller",
                   "controller + target must equal genome.length = " + std::to_string(length));
  }
}

}  // namespace

FlatLandscape make_flat_landscape(const LandscapeSpec& spec, std::size_t length) {
  if (spec.kind == "onemax") return FlatLandscape(OneMax{});
  if (spec.kind == "second_order") return FlatLandscape(SecondOrder(spec.controller, spec.target));
  if (spec.kind == "rugged_nk") return FlatLandscape(RuggedNk(length, spec.k, spec.seed));
  if (spec.kind == "random_table") return FlatLandscape(RandomTable(spec.seed));
  throw ConfigError("landscape.kind: unknown flat landscape '" + spec.kind + "'");
}

SegmentedSum make_segmented_landscape(const LandscapeSpec& spec, unsigned id_width) {
  if (!spec.segmented())
    throw ConfigError("landscape.kind: '" + spec.kind + "' is not a segmented landscape");
  return SegmentedSum(spec.weights, id_width);
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  const Ini ini(path);
  ExperimentConfig cfg;
  cfg.engine = read_engine(ini);
  cfg.landscape = read_landscape(ini);
  cfg.out_dir = ini.get_string("output", "dir", "out");

  if (ini.has_section("compare")) {
    cfg.compare_budget = ini.get_u64("compare", "budget", 10000);
    cfg.compare_seeds = ini.get_u64s("compare", "seeds");
    if (cfg.compare_seeds.empty()) cfg.compare_seeds = default_seeds();
  }
  if (ini.has_section("biomimetic")) {
    GAConfig bio = cfg.engine;
    bio.population_size = ini.get_u64("biomimetic", "population", bio.population_size);
    bio.survivor_fraction =
        ini.get_double("biomimetic", "survivor_fraction", bio.survivor_fraction);
    bio.elitist = ini.get_bool("biomimetic", "elitist", bio.elitist);
    bio.init_mode = init_from_name(
        ini, "biomimetic", ini.get_string("biomimetic", "init", "homogeneous"));
    bio.operators.p_m = ini.get_double("biomimetic", "p_m", bio.operators.p_m);
    bio.operators.p_sig = ini.get_double("biomimetic", "p_sig", bio.operators.p_sig);
    bio.operators.p_inversion =
        ini.get_double("biomimetic", "p_inversion", bio.operators.p_inversion);
    bio.operators.p_translocation =
        ini.get_double("biomimetic", "p_translocation", bio.operators.p_translocation);
    bio.operators.p_duplication =
        ini.get_double("biomimetic", "p_duplication", bio.operators.p_duplication);
    const IniEntry* cross = ini.lookup("biomimetic", "crossover");
    if (cross) bio.operators.crossover = crossover_from_name(ini, "biomimetic", cross->value);
    cfg.biomimetic = std::move(bio);
  }

  ini.reject_unused();

  // Semantic checks, with the offending line where one exists.
  try {
    cfg.engine.validate();
    if (cfg.biomimetic) cfg.biomimetic->validate();
  } catch (const std::invalid_argument& e) {
    const std::string what = e.what();
    const auto dot = what.find('.');
    if (dot != std::string::npos) {
      const std::string section = what.substr(0, dot);
      const std::string key = what.substr(dot + 1, what.find(' ') - dot - 1);
      const IniEntry* entry = ini.lookup(section, key);
      if (entry) ini.fail(entry->line, what);
    }
    throw ConfigError(path.string() + ": " + what);
  }
  cross_validate(ini, cfg.engine, cfg.landscape);
  try {
    if (cfg.landscape.segmented()) {
      make_segmented_landscape(cfg.landscape,
                               std::get<SegmentedTemplate>(cfg.engine.genome).id_width);
    } else {
      make_flat_landscape(cfg.landscape, std::get<FlatTemplate>(cfg.engine.genome).length);
    }
  } catch (const std::invalid_argument& e) {
    ini.fail_key("landscape", "kind", e.what());
  }
  return cfg;
}

std::vector<std::uint64_t> default_seeds() {
  std::vector<std::uint64_t> seeds(10);
  for (std::size_t i = 0; i < seeds.size(); ++i) seeds[i] = i + 1;
  return seeds;
}

}  // namespace galab
