#include "knapkern/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "knapkern/error.hpp"

namespace knapkern {

namespace {

using nlohmann::json;

[[noreturn]] void schema(const std::string& what) { fail(ErrorCode::schema, what); }

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    schema(std::string("invalid JSON: ") + e.what());
  }
}

void expect_kind(const json& doc, std::string_view kind) {
  if (!doc.is_object()) schema("document must be an object");
  if (!doc.contains("kind") || !doc["kind"].is_string()) schema("missing string field \"kind\"");
  if (doc["kind"].get<std::string>() != kind) {
    schema("expected kind \"" + std::string(kind) + "\", got \"" + doc["kind"].get<std::string>() + "\"");
  }
}

void expect_keys(const json& obj, std::initializer_list<std::string_view> allowed,
                 std::string_view where) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) schema("unknown field \"" + key + "\" in " + std::string(where));
  }
}

const json& field(const json& obj, const char* name) {
  if (!obj.contains(name)) schema(std::string("missing field \"") + name + "\"");
  return obj[name];
}

Nat natural_field(const json& obj, const char* name) {
  const json& value = field(obj, name);
  if (!value.is_string()) schema(std::string("field \"") + name + "\" must be a decimal string");
  auto parsed = parse_natural(value.get<std::string>());
  if (!parsed) schema(std::string("field \"") + name + "\" is not a decimal natural");
  return *parsed;
}

unsigned small_field(const json& obj, const char* name) {
  const json& value = field(obj, name);
  if (!value.is_number_integer() || value.get<long long>() < 0 ||
      value.get<long long>() > 0xFFFFFFFFll) {
    schema(std::string("field \"") + name + "\" must be a nonnegative integer");
  }
  return value.get<unsigned>();
}

json label_json(const ItemLabel& label) {
  return std::visit(
      [](const auto& l) -> json {
        using L = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<L, EncodingLabel>) {
          return {{"family", "encoding"}, {"instance", l.instance}, {"position", l.position}};
        } else if constexpr (std::is_same_v<L, QuadratizationLabel>) {
          const int alpha = l.kind == QuadKind::zero_one ? 0 : 1;
          const int beta = l.kind == QuadKind::one_zero ? 0 : 1;
          return {{"family", "quadratization"}, {"alpha", alpha}, {"beta", beta}, {"k", l.k}, {"l", l.l}};
        } else if constexpr (std::is_same_v<L, IndexLabel>) {
          return {{"family", "index"}, {"bit", l.bit}, {"k", l.k}};
        } else {
          return nullptr;
        }
      },
      label);
}

ItemLabel parse_label(const json& obj) {
  if (obj.is_null()) return std::monostate{};
  if (!obj.is_object()) schema("label must be an object or null");
  const json& family = field(obj, "family");
  if (!family.is_string()) schema("label family must be a string");
  const std::string name = family.get<std::string>();
  if (name == "plain") {
    expect_keys(obj, {"family"}, "label");
    return std::monostate{};
  }
  if (name == "encoding") {
    expect_keys(obj, {"family", "instance", "position"}, "label");
    return EncodingLabel{small_field(obj, "instance"), small_field(obj, "position")};
  }
  if (name == "index") {
    expect_keys(obj, {"family", "bit", "k"}, "label");
    const unsigned bit = small_field(obj, "bit");
    if (bit > 1) fail(ErrorCode::invariant, "index label bit must be 0 or 1");
    return IndexLabel{bit, small_field(obj, "k")};
  }
  if (name == "quadratization") {
    expect_keys(obj, {"family", "alpha", "beta", "k", "l"}, "label");
    const unsigned alpha = small_field(obj, "alpha");
    const unsigned beta = small_field(obj, "beta");
    const unsigned k = small_field(obj, "k");
    const unsigned l = small_field(obj, "l");
    if (alpha > 1 || beta > 1 || (alpha == 0 && beta == 0)) {
      fail(ErrorCode::invariant, "quadratization label needs (alpha,beta) in {(1,0),(0,1),(1,1)}");
    }
    const QuadKind kind = alpha == 1 ? (beta == 1 ? QuadKind::one_one : QuadKind::one_zero)
                                     : QuadKind::zero_one;
    if (k > l || (k == l && kind != QuadKind::one_one)) {
      fail(ErrorCode::invariant, "quadratization label needs k < l, or k = l with (1,1)");
    }
    return QuadratizationLabel{kind, k, l};
  }
  schema("unknown label family \"" + name + "\"");
}

}  // namespace

std::string to_json(const KnapsackInstance& inst, bool strip_labels) {
  json items = json::array();
  for (const auto& item : inst.items) {
    json entry = {{"weight", to_decimal(item.weight)}, {"profit", to_decimal(item.profit)}};
    if (!strip_labels && !std::holds_alternative<std::monostate>(item.label)) {
      entry["label"] = label_json(item.label);
    }
    items.push_back(std::move(entry));
  }
  json doc = {{"kind", "knapsack"},
              {"items", std::move(items)},
              {"capacity", to_decimal(inst.capacity)},
              {"target", to_decimal(inst.target)}};
  return doc.dump();
}

std::string to_json(const RestrictedSubsetSumInstance& inst) {
  json numbers = json::array();
  for (const auto& a : inst.numbers()) numbers.push_back(to_decimal(a));
  return json{{"kind", "rss"}, {"n", inst.n()}, {"numbers", std::move(numbers)}}.dump();
}

std::string to_json(const X3CInstance& inst) {
  json triples = json::array();
  for (const auto& t : inst.triples()) triples.push_back({t[0], t[1], t[2]});
  return json{{"kind", "x3c"}, {"n", inst.n()}, {"triples", std::move(triples)}}.dump();
}

std::string to_json(const SubsetSumInstance& inst) {
  json numbers = json::array();
  for (const auto& a : inst.numbers) numbers.push_back(to_decimal(a));
  return json{{"kind", "subset-sum"}, {"numbers", std::move(numbers)}, {"target", to_decimal(inst.target)}}
      .dump();
}

KnapsackInstance parse_knapsack(std::string_view text) {
  const json doc = parse_document(text);
  expect_kind(doc, "knapsack");
  expect_keys(doc, {"kind", "items", "capacity", "target", "meta"}, "knapsack");
  const json& items = field(doc, "items");
  if (!items.is_array()) schema("\"items\" must be an array");
  KnapsackInstance out;
  for (const auto& entry : items) {
    if (!entry.is_object()) schema("each item must be an object");
    expect_keys(entry, {"weight", "profit", "label"}, "item");
    Item item{natural_field(entry, "weight"), natural_field(entry, "profit"), {}};
    if (entry.contains("label")) item.label = parse_label(entry["label"]);
    out.items.push_back(std::move(item));
  }
  out.capacity = natural_field(doc, "capacity");
  out.target = natural_field(doc, "target");
  return out;
}

RestrictedSubsetSumInstance parse_rss(std::string_view text) {
  const json doc = parse_document(text);
  expect_kind(doc, "rss");
  expect_keys(doc, {"kind", "n", "numbers", "meta"}, "rss");
  const unsigned n = small_field(doc, "n");
  const json& numbers = field(doc, "numbers");
  if (!numbers.is_array()) schema("\"numbers\" must be an array");
  std::vector<Nat> values;
  for (const auto& v : numbers) {
    if (!v.is_string()) schema("rss numbers must be decimal strings");
    auto parsed = parse_natural(v.get<std::string>());
    if (!parsed) schema("rss number is not a decimal natural");
    values.push_back(*parsed);
  }
  return RestrictedSubsetSumInstance(n, std::move(values));
}

X3CInstance parse_x3c(std::string_view text) {
  const json doc = parse_document(text);
  expect_kind(doc, "x3c");
  expect_keys(doc, {"kind", "n", "triples", "meta"}, "x3c");
  const unsigned n = small_field(doc, "n");
  const json& triples = field(doc, "triples");
  if (!triples.is_array()) schema("\"triples\" must be an array");
  std::vector<Triple> out;
  for (const auto& t : triples) {
    if (!t.is_array() || t.size() != 3) schema("each triple must be an array of three integers");
    Triple triple{};
    for (std::size_t k = 0; k < 3; ++k) {
      if (!t[k].is_number_integer() || t[k].get<long long>() < 0 ||
          t[k].get<long long>() > 0xFFFFFFFFll) {
        schema("triple entries must be nonnegative integers");
      }
      triple[k] = t[k].get<unsigned>();
    }
    out.push_back(triple);
  }
  return X3CInstance(n, std::move(out));
}

SubsetSumInstance parse_subset_sum(std::string_view text) {
  const json doc = parse_document(text);
  expect_kind(doc, "subset-sum");
  expect_keys(doc, {"kind", "numbers", "target", "meta"}, "subset-sum");
  const json& numbers = field(doc, "numbers");
  if (!numbers.is_array()) schema("\"numbers\" must be an array");
  SubsetSumInstance out;
  for (const auto& v : numbers) {
    if (!v.is_string()) schema("numbers must be decimal strings");
    auto parsed = parse_natural(v.get<std::string>());
    if (!parsed) schema("number is not a decimal natural");
    out.numbers.push_back(*parsed);
  }
  out.target = natural_field(doc, "target");
  return out;
}

std::string instance_kind(std::string_view text) {
  const json doc = parse_document(text);
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string()) {
    schema("missing string field \"kind\"");
  }
  return doc["kind"].get<std::string>();
}

std::string composition_metadata_json(const ComposedInstance& composed) {
  const auto& c = composed.constants;
  json doc = {{"t", c.t},
              {"n", c.n},
              {"inputs", composed.input_count},
              {"X", to_decimal(c.X)},
              {"B", to_decimal(c.B)},
              {"Y", to_decimal(c.Y)},
              {"Z", to_decimal(c.Z)},
              {"T", to_decimal(c.T)},
              {"W", to_decimal(c.W)},
              {"P", to_decimal(c.P)},
              {"y_rule", c.y_rule == YRule::narrow ? "narrow" : "widened"}};
  return doc.dump();
}

std::string kernel_report_json(const KernelReport& report) {
  json doc = {{"r", report.r},
              {"branch", report.branch == KernelBranch::solved ? "solved" : "reduced"},
              {"input_bits", report.input_bits},
              {"output_bits", report.output_bits}};
  return doc.dump();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::precondition, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::precondition, "cannot write " + path.string());
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

}  // namespace knapkern
