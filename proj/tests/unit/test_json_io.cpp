#include "doctest.h"

#include "knapkern/composition.hpp"
#include "knapkern/error.hpp"
#include "knapkern/generators.hpp"
#include "knapkern/json_io.hpp"

using namespace knapkern;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected knapkern::Error");
  return ErrorCode::schema;
}

}  // namespace

TEST_CASE("knapsack round trip with labels") {
  const std::vector<RestrictedSubsetSumInstance> inputs(4, RestrictedSubsetSumInstance(1, {84, 84, 84}));
  const auto composed = compose(inputs);
  const auto back = parse_knapsack(to_json(composed.knapsack));
  REQUIRE(back.items.size() == composed.knapsack.items.size());
  for (std::size_t i = 0; i < back.items.size(); ++i) {
    CHECK(back.items[i].weight == composed.knapsack.items[i].weight);
    CHECK(back.items[i].profit == composed.knapsack.items[i].profit);
    CHECK(back.items[i].label == composed.knapsack.items[i].label);
  }
  CHECK(back.capacity == composed.knapsack.capacity);
  CHECK(back.target == composed.knapsack.target);

  const std::string stripped = to_json(composed.knapsack, true);
  CHECK(stripped.find("label") == std::string::npos);
  for (const auto& item : parse_knapsack(stripped).items) {
    CHECK(std::holds_alternative<std::monostate>(item.label));
  }
}

TEST_CASE("big integers are decimal strings") {
  KnapsackInstance inst;
  inst.items.push_back(Item{pow_ui(2, 200), 1, {}});
  inst.capacity = pow_ui(10, 40);
  inst.target = 0;
  const std::string text = to_json(inst);
  CHECK(text.find("\"1606938044258990275541962092341162602522202993782792835301376\"") != std::string::npos);
  CHECK(parse_knapsack(text).items[0].weight == pow_ui(2, 200));
}

TEST_CASE("other kinds round trip") {
  const auto rss = gen_rss(2, 4, true);
  CHECK(parse_rss(to_json(rss)).numbers() == rss.numbers());
  const auto x3c = gen_x3c(3, 4, false);
  CHECK(parse_x3c(to_json(x3c)).triples() == x3c.triples());
  const SubsetSumInstance ss{{3, 5}, 8};
  const auto back = parse_subset_sum(to_json(ss));
  CHECK(back.numbers == ss.numbers);
  CHECK(back.target == 8);
  CHECK(instance_kind(to_json(ss)) == "subset-sum");
}

TEST_CASE("schema errors and invariant errors are distinct") {
  CHECK(code_of([] { parse_rss("{"); }) == ErrorCode::schema);
  CHECK(code_of([] { parse_rss("[]"); }) == ErrorCode::schema);
  CHECK(code_of([] { parse_rss(R"({"kind":"x3c","n":1,"triples":[]})"); }) == ErrorCode::schema);
  CHECK(code_of([] { parse_rss(R"({"kind":"rss","n":1,"numbers":[84,84,84]})"); }) == ErrorCode::schema);
  CHECK(code_of([] { parse_rss(R"({"kind":"rss","n":1,"numbers":["84","84","084"]})"); }) == ErrorCode::schema);
  CHECK(code_of([] { parse_rss(R"({"kind":"rss","n":1,"numbers":["84"],"extra":1})"); }) == ErrorCode::schema);
  CHECK(code_of([] { parse_rss(R"({"kind":"rss","n":1,"numbers":["84","84","85"]})"); }) == ErrorCode::invariant);
  CHECK(code_of([] { parse_rss(R"({"kind":"rss","n":1,"numbers":["84","84"]})"); }) == ErrorCode::invariant);
  CHECK(code_of([] { parse_x3c(R"({"kind":"x3c","n":1,"triples":[[1,2,3],[1,2,3],[1,2,4]]})"); }) ==
        ErrorCode::invariant);
  CHECK(code_of([] { parse_x3c(R"({"kind":"x3c","n":1,"triples":[[1,2],[1,2,3],[1,2,3]]})"); }) ==
        ErrorCode::schema);
  CHECK(code_of([] { parse_knapsack(R"({"kind":"knapsack","items":[{"weight":"-1","profit":"2"}],"capacity":"1","target":"1"})"); }) ==
        ErrorCode::schema);
  CHECK(code_of([] { parse_knapsack(R"({"kind":"knapsack","items":[],"capacity":"1"})"); }) == ErrorCode::schema);
  CHECK(code_of([] {
          parse_knapsack(R"({"kind":"knapsack","items":[{"weight":"1","profit":"2","label":{"family":"index","bit":2,"k":0}}],"capacity":"1","target":"1"})");
        }) == ErrorCode::invariant);
  CHECK(code_of([] {
          parse_knapsack(R"({"kind":"knapsack","items":[{"weight":"1","profit":"2","label":{"family":"other"}}],"capacity":"1","target":"1"})");
        }) == ErrorCode::schema);
  CHECK(code_of([] { instance_kind("{}"); }) == ErrorCode::schema);
}

TEST_CASE("metadata documents") {
  const std::vector<RestrictedSubsetSumInstance> three(3, RestrictedSubsetSumInstance(1, {84, 84, 84}));
  const auto meta = composition_metadata_json(compose(three));
  CHECK(meta.find("\"t\":4") != std::string::npos);
  CHECK(meta.find("\"inputs\":3") != std::string::npos);
  CHECK(meta.find("\"B\":\"1092\"") != std::string::npos);
  KernelReport report{6, KernelBranch::reduced, 160, 153};
  CHECK(kernel_report_json(report) == R"({"branch":"reduced","input_bits":160,"output_bits":153,"r":6})");
  CHECK(parse_knapsack(R"({"kind":"knapsack","items":[],"capacity":"0","target":"0","meta":{"seed":3}})").items.empty());
}
