#include <gtest/gtest.h>

#include "json.hpp"
#include "kpairs/cli.hpp"

using namespace kpairs;
using kpairs::cli::Report;

namespace {

std::string value_of(const Report& r, const std::string& name) {
  const auto* q = r.find(name);
  return q ? q->value.str() : "<missing>";
}

bool has_finding(const Report& r, const std::string& text) {
  return std::find(r.findings.begin(), r.findings.end(), text) !=
         r.findings.end();
}

}  // namespace

TEST(CliGen, FamilyCounts) {
  const Network n1 = parse_network(cli::cmd_gen({"n1", 3}));
  EXPECT_EQ(n1.nodes().size(), 8u);
  EXPECT_EQ(n1.edges().size(), 10u);
  const Network hu = parse_network(cli::cmd_gen({"hu"}));
  EXPECT_EQ(hu.commodities().size(), 3u);
  const Network t2 =
      parse_network(cli::cmd_gen({"bipartite", 0, "II", 2, 2}));
  EXPECT_EQ(t2.commodities().size(), 6u);
  EXPECT_THROW(cli::cmd_gen({"bipartite", 0, "III", 2, 2}),
               std::invalid_argument);
  EXPECT_THROW(cli::cmd_gen({"petersen"}), std::invalid_argument);
}

TEST(CliReports, BoundsAndRoute) {
  const Report b = cli::cmd_bounds(gen_hu(), {}, {16, 10, 1});
  EXPECT_EQ(value_of(b, "sparsity"), "4/3");
  EXPECT_EQ(value_of(b, "wiener"), "8/7");
  EXPECT_EQ(value_of(cli::cmd_bounds(gen_n1(2), {}, {16, 10, 1}), "meagerness"),
            "1");
  EXPECT_EQ(value_of(cli::cmd_route(gen_n1(5), false, false), "routing"),
            "1/5");
  const Report scheme = cli::cmd_route(gen_hu(), true, true);
  EXPECT_FALSE(scheme.scheme.empty());
  EXPECT_NE(scheme.lp_dump.find("cap_"), std::string::npos);
}

TEST(CliReports, GapOnKnownInstances) {
  const Report hu = cli::cmd_gap(gen_hu(), {}, {16, 10, 1}, std::nullopt, "");
  EXPECT_EQ(value_of(hu, "routing"), "8/7");
  EXPECT_EQ(value_of(hu, "coding_bound"), "8/7");
  EXPECT_TRUE(has_finding(hu, cli::kConjectureConfirmed));

  const Report n1 = cli::cmd_gap(gen_n1(4), {}, {16, 10, 1}, std::nullopt, "");
  EXPECT_EQ(value_of(n1, "meagerness"), "1");
  EXPECT_EQ(value_of(n1, "coding_bound"), "1/4");
  EXPECT_EQ(value_of(n1, "meagerness_to_coding_ratio"), "4");

  const Report t1 = cli::cmd_gap(gen_bipartite(BipartiteType::kTypeI, 2, 3),
                                 {}, {16, 10, 1}, std::nullopt, "");
  EXPECT_EQ(value_of(t1, "routing"), "3/4");
  EXPECT_EQ(value_of(t1, "coding_bound"), "3/4");
  EXPECT_TRUE(has_finding(t1, cli::kConjectureConfirmed));
}

TEST(CliReports, GapWithoutCertificate) {
  const Network triangle(false, {"a", "b", "c"},
                         {{"a", "b"}, {"b", "c"}, {"a", "c"}},
                         {{"1", "a", "b"}});
  const Report r = cli::cmd_gap(triangle, {}, {16, 10, 1}, std::nullopt, "");
  EXPECT_EQ(r.find("coding_bound"), nullptr);
  EXPECT_EQ(value_of(r, "routing"), "2");
  EXPECT_FALSE(has_finding(r, cli::kConjectureConfirmed));
}

TEST(CliReports, MachineOutputIsExactAndStable) {
  const Report r = cli::cmd_bounds(gen_hu(), {}, {16, 10, 1});
  const std::string a = cli::render_machine(r);
  const std::string b =
      cli::render_machine(cli::cmd_bounds(gen_hu(), {}, {16, 10, 1}));
  EXPECT_EQ(a, b);
  const auto doc = nlohmann::json::parse(a);
  EXPECT_EQ(doc["quantities"]["sparsity"]["value"], "4/3");
  EXPECT_FALSE(doc.contains("timing_ms"));
  EXPECT_TRUE(nlohmann::json::parse(cli::render_machine(r, true))
                  .contains("timing_ms"));
  EXPECT_NE(cli::render_human(r).find("1.33333"), std::string::npos);
}

TEST(CliReports, CheckShowsResidualWhenInvalid) {
  Certificate c = gen_certificate_hu();
  c.steps.pop_back();
  const Report r = cli::cmd_check(gen_hu(), c, "cut.cert");
  ASSERT_EQ(r.certificates.size(), 1u);
  EXPECT_FALSE(r.certificates[0].valid);
  EXPECT_NE(r.certificates[0].residual, "0");
}
