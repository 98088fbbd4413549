#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "check.hpp"
#include "gls/scenario.hpp"

namespace gls {

namespace {

constexpr std::array<std::string_view, 5> kSections = {"scenario", "hi", "lo", "common", "shift"};

bool allowed_key(std::string_view section, std::string_view key) {
  static const std::map<std::string_view, std::vector<std::string_view>> keys = {
      {"scenario", {"name"}},
      {"hi", {"sites", "nodes", "load", "op_kg_per_node_year", "ci_g_per_kwh", "node_power_w", "pue", "nu"}},
      {"lo", {"sites", "nodes", "load", "op_kg_per_node_year", "ci_g_per_kwh", "node_power_w", "pue", "nu"}},
      {"common", {"gamma", "embodied_kg_per_node_year"}},
      {"shift", {"alpha", "beta", "eta"}},
  };
  const auto& list = keys.at(section);
  return std::find(list.begin(), list.end(), key) != list.end();
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

struct Entry {
  std::string value;
  std::size_t line;
};

struct Section {
  std::size_t line = 0;
  std::map<std::string, Entry, std::less<>> entries;

  const Entry* find(std::string_view key) const {
    auto it = entries.find(key);
    return it == entries.end() ? nullptr : &it->second;
  }
};

using Document = std::map<std::string, Section, std::less<>>;

Document tokenize(std::string_view text) {
  Document doc;
  Section* current = nullptr;
  std::string current_name;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(line_no, "unterminated section header");
      const std::string name(trim(line.substr(1, line.size() - 2)));
      if (std::find(kSections.begin(), kSections.end(), name) == kSections.end())
        throw ParseError(line_no, "unknown section [" + name + "]");
      if (doc.count(name)) throw ParseError(line_no, "duplicate section [" + name + "]");
      current = &doc[name];
      current->line = line_no;
      current_name = name;
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
    if (!current) throw ParseError(line_no, "key outside of any section");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) throw ParseError(line_no, "empty key");
    if (!allowed_key(current_name, key))
      throw ParseError(line_no, "unknown key '" + key + "' in [" + current_name + "]");
    if (value.empty()) throw ParseError(line_no, "empty value for '" + key + "'");
    if (!current->entries.emplace(key, Entry{value, line_no}).second)
      throw ParseError(line_no, "duplicate key '" + key + "'");
  }
  return doc;
}

class Reader {
 public:
  Reader(const Document& doc, std::string section) : section_(std::move(section)) {
    auto it = doc.find(section_);
    if (it == doc.end()) throw ParseError(0, "missing required section [" + section_ + "]");
    data_ = &it->second;
  }

  bool has(std::string_view key) const { return data_->find(key) != nullptr; }

  const Entry& required(std::string_view key) const {
    const Entry* e = data_->find(key);
    if (!e)
      throw ParseError(data_->line, "missing required key '" + std::string(key) + "' in [" + section_ + "]");
    return *e;
  }

  std::string text(std::string_view key) const { return required(key).value; }

  double number(std::string_view key) const { return parse_number(required(key), key); }

  std::optional<double> optional_number(std::string_view key) const {
    const Entry* e = data_->find(key);
    if (!e) return std::nullopt;
    return parse_number(*e, key);
  }

  int integer(std::string_view key) const {
    const Entry& e = required(key);
    int value = 0;
    const char* end = e.value.data() + e.value.size();
    auto [ptr, ec] = std::from_chars(e.value.data(), end, value);
    if (ec != std::errc{} || ptr != end)
      throw ParseError(e.line, "'" + std::string(key) + "' expects a whole number, got '" + e.value + "'");
    return value;
  }

  /// Runs `check`, re-raising range violations against the section and line.
  template <typename F>
  void checked(std::string_view key, F&& check) const {
    try {
      check();
    } catch (const InvalidParameter& err) {
      const Entry* e = data_->find(key);
      const std::size_t line = e ? e->line : data_->line;
      throw InvalidParameter(section_ + "." + std::string(key),
                             "line " + std::to_string(line) + ": " + err.what());
    }
  }

  const std::string& section() const { return section_; }
  std::size_t line() const { return data_->line; }

 private:
  double parse_number(const Entry& e, std::string_view key) const {
    double value = 0.0;
    const char* end = e.value.data() + e.value.size();
    auto [ptr, ec] = std::from_chars(e.value.data(), end, value, std::chars_format::fixed);
    if (ec != std::errc{} || ptr != end)
      throw ParseError(e.line, "'" + std::string(key) + "' expects a decimal number, got '" + e.value + "'");
    return value;
  }

  std::string section_;
  const Section* data_ = nullptr;
};

struct ClassRead {
  SiteClass cls;
  std::optional<NodePowerModel> power;
};

ClassRead read_class(const Reader& r, double gamma, double embodied, std::vector<std::string>& notes) {
  const int sites = r.integer("sites");
  const int nodes = r.integer("nodes");
  const double load = r.number("load");
  r.checked("sites", [&] { if (sites < 1) throw InvalidParameter("sites", "must be >= 1"); });
  r.checked("nodes", [&] { if (nodes < 1) throw InvalidParameter("nodes", "must be >= 1"); });
  r.checked("load", [&] { detail::require_fraction("load", load); });

  const bool direct = r.has("op_kg_per_node_year");
  const bool any_power = r.has("ci_g_per_kwh") || r.has("node_power_w") || r.has("pue") || r.has("nu");
  if (direct && any_power)
    throw ParseError(r.required("op_kg_per_node_year").line,
                     "[" + r.section() + "] sets op_kg_per_node_year together with node power keys; use one or the other");
  if (!direct && !any_power)
    throw ParseError(r.line(), "[" + r.section() + "] needs op_kg_per_node_year or ci_g_per_kwh + node_power_w + pue");

  std::optional<double> op;
  std::optional<NodePowerModel> power;
  if (direct) {
    op = r.number("op_kg_per_node_year");
    r.checked("op_kg_per_node_year", [&] { detail::require_non_negative("op_kg_per_node_year", *op); });
  } else {
    NodePowerModel m;
    m.carbon_intensity = r.number("ci_g_per_kwh");
    m.active_power_w = r.number("node_power_w");
    m.pue = r.number("pue");
    m.network_overhead = r.optional_number("nu").value_or(0.0);
    m.idle_fraction = gamma;
    r.checked("ci_g_per_kwh", [&] { detail::require_non_negative("ci_g_per_kwh", m.carbon_intensity); });
    r.checked("node_power_w", [&] { detail::require_positive("node_power_w", m.active_power_w); });
    r.checked("pue", [&] { m.validate(); });
    power = m;
  }

  ClassRead out;
  out.cls = make_site_class(sites, nodes, load, embodied, op, power, notes, r.section());
  out.power = power;
  return out;
}

std::string format_number(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed);
  if (ec != std::errc{}) throw Error("cannot format number");
  return std::string(buf.data(), ptr);
}

}  // namespace

ScenarioConfig load_scenario(std::string_view text) {
  const Document doc = tokenize(text);
  const Reader scenario(doc, "scenario");
  const Reader hi(doc, "hi");
  const Reader lo(doc, "lo");
  const Reader common(doc, "common");
  const Reader shift(doc, "shift");

  ScenarioConfig config;
  config.name = scenario.text("name");

  config.gamma = common.number("gamma");
  common.checked("gamma", [&] { detail::require_fraction("gamma", config.gamma); });
  const double embodied = common.number("embodied_kg_per_node_year");
  common.checked("embodied_kg_per_node_year",
                 [&] { detail::require_non_negative("embodied_kg_per_node_year", embodied); });

  config.policy = {shift.number("alpha"), shift.number("beta"), shift.number("eta")};
  shift.checked("alpha", [&] { detail::require_fraction("alpha", config.policy.alpha); });
  shift.checked("beta", [&] { detail::require_fraction("beta", config.policy.beta); });
  shift.checked("eta", [&] { config.policy.validate(); });

  ClassRead h = read_class(hi, config.gamma, embodied, config.notes);
  ClassRead l = read_class(lo, config.gamma, embodied, config.notes);
  config.hi = h.cls;
  config.hi_power = h.power;
  config.lo = l.cls;
  config.lo_power = l.power;

  config.validate();
  return config;
}

ScenarioConfig load_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open scenario file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read scenario file '" + path.string() + "'");
  return load_scenario(buffer.str());
}

std::string to_scenario_text(const ScenarioConfig& config) {
  config.validate();
  if (config.hi.embodied_per_node != config.lo.embodied_per_node)
    throw InvalidParameter("embodied_per_node", "the file format needs the same value for both classes");
  if (config.name.find_first_of("#\n") != std::string::npos)
    throw InvalidParameter("name", "must not contain '#' or line breaks");

  std::ostringstream out;
  out << "[scenario]\nname = " << config.name << "\n";

  const auto write_class = [&](const char* section, const SiteClass& cls, const std::optional<NodePowerModel>& power) {
    out << "\n[" << section << "]\n";
    out << "sites = " << cls.site_count << "\n";
    out << "nodes = " << cls.nodes_per_site << "\n";
    out << "load = " << format_number(cls.load) << "\n";
    if (power) {
      out << "ci_g_per_kwh = " << format_number(power->carbon_intensity) << "\n";
      out << "node_power_w = " << format_number(power->active_power_w) << "\n";
      out << "pue = " << format_number(power->pue) << "\n";
      out << "nu = " << format_number(power->network_overhead) << "\n";
    } else {
      out << "op_kg_per_node_year = " << format_number(cls.op_full_per_node) << "\n";
    }
  };
  write_class("hi", config.hi, config.hi_power);
  write_class("lo", config.lo, config.lo_power);

  out << "\n[common]\n";
  out << "gamma = " << format_number(config.gamma) << "\n";
  out << "embodied_kg_per_node_year = " << format_number(config.hi.embodied_per_node) << "\n";

  out << "\n[shift]\n";
  out << "alpha = " << format_number(config.policy.alpha) << "\n";
  out << "beta = " << format_number(config.policy.beta) << "\n";
  out << "eta = " << format_number(config.policy.eta) << "\n";
  return out.str();
}

}  // namespace gls
