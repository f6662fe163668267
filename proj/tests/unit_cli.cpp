#include <cstdlib>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "bouquet_kit/cli.hpp"
#include "bouquet_kit/io.hpp"
#include "bouquet_kit/random_gen.hpp"
#include "bouquet_kit/report.hpp"
#include "support/helpers.hpp"

using namespace bouquet_kit;

namespace {

std::string fixture(const std::string& name) {
    return std::string(BOUQUET_KIT_FIXTURES) + "/" + name;
}

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args, const std::string& stdin_text = {}) {
    std::ostringstream out, err;
    std::istringstream in(stdin_text);
    int code = run_command(args, out, err, in);
    return {code, out.str(), err.str()};
}

nlohmann::json strip_timings(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    j.erase("timings");
    return j;
}

} // namespace

TEST_CASE("text parsing matches the built fixtures") {
    Hypergraph k = parse_hypergraph_file(fixture("fig2.hg"));
    REQUIRE(k == helpers::fig2());

    std::istringstream comment("# comment\nx\n");
    Hypergraph single = parse_hypergraph(comment);
    REQUIRE(single.vertex_count() == 1);
    REQUIRE(single.edge_count() == 1);
}

TEST_CASE("antichain violations name the offending lines") {
    std::istringstream in("x\nx y\n");
    try {
        parse_hypergraph(in);
        FAIL("expected NotAntichain");
    } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::not_antichain);
        REQUIRE(std::string(e.what()).find("line 1") != std::string::npos);
        REQUIRE(std::string(e.what()).find("line 2") != std::string::npos);
    }
    std::istringstream again("x\nx y\n");
    REQUIRE(parse_hypergraph(again, BuildMode::minimalize).edge_count() == 1);
}

TEST_CASE("JSON input is auto-detected by the leading brace") {
    Hypergraph k = parse_hypergraph_file(fixture("fig2.json"));
    REQUIRE(k == helpers::fig2());

    std::istringstream bad("{\"edges\": [[\"a\"], [\"bad label\"]]}");
    REQUIRE_THROWS_MATCHES(parse_hypergraph(bad), Error,
                           Catch::Matchers::Predicate<Error>([](const Error& e) {
                               return e.kind() == ErrorKind::parse_error;
                           }));

    std::istringstream empty_edge("{\"edges\": [[\"a\"], []]}");
    REQUIRE_THROWS_MATCHES(parse_hypergraph(empty_edge), Error,
                           Catch::Matchers::Predicate<Error>([](const Error& e) {
                               return e.kind() == ErrorKind::empty_edge;
                           }));
}

TEST_CASE("serialization round-trips through both formats") {
    Hypergraph h = helpers::fig3();
    std::istringstream text(to_text(h));
    REQUIRE(parse_hypergraph(text) == h);
    std::istringstream json(to_input_json(h).dump());
    REQUIRE(parse_hypergraph(json) == h);
}

TEST_CASE("random generation is deterministic and minimalized") {
    RandomHypergraphParams p{6, 4, 2, 2, 7};
    Hypergraph a = generate_random_hypergraph(p);
    Hypergraph b = generate_random_hypergraph(p);
    REQUIRE(a == b);
    REQUIRE(a.vertex_count() <= 6);
    REQUIRE(a.edge_count() <= 4);

    Hypergraph tiny = generate_random_hypergraph({1, 1, 1, 1, 0});
    REQUIRE(tiny.edge_count() == 1);
    REQUIRE(tiny.labels() == std::vector<std::string>{"v0"});

    Hypergraph dense = generate_random_hypergraph({5, 50, 2, 3, 1});
    REQUIRE(dense.edge_count() <= 20);  // C(5,2) + C(5,3)
    for (int i = 0; i < dense.edge_count(); ++i)
        for (int j = 0; j < dense.edge_count(); ++j)
            if (i != j) REQUIRE_FALSE(dense.edge(i).subset_of(dense.edge(j)));

    REQUIRE_THROWS_AS(generate_random_hypergraph({0, 1, 1, 1, 0}), Error);
    REQUIRE_THROWS_AS(generate_random_hypergraph({3, 1, 2, 1, 0}), Error);
    REQUIRE_THROWS_AS(generate_random_hypergraph({3, 1, 1, 4, 0}), Error);
}

TEST_CASE("caps override parsing") {
    Caps caps = parse_caps_override("vertices=12,covers=500");
    REQUIRE(caps.max_vertices == 12);
    REQUIRE(caps.max_covers == 500);
    REQUIRE_THROWS_AS(parse_caps_override("nope=1"), Error);
    REQUIRE_THROWS_AS(parse_caps_override("vertices=abc"), Error);
}

TEST_CASE("analysis report JSON round-trips") {
    AnalysisReport r;
    r.command = "alpha";
    r.input_digest = "fnv1a:0123456789abcdef";
    r.results = {{"alpha", 4}};
    r.timings = {{"total_ms", 1.5}};
    REQUIRE(AnalysisReport::from_json(r.to_json()) == r);
}

TEST_CASE("digest is canonical: edge order does not matter") {
    Hypergraph a = helpers::graph({{"a", "b"}, {"c", "d"}});
    Hypergraph b = helpers::graph({{"c", "d"}, {"a", "b"}});
    // same labels, same canonical edge sets, different input order and
    // therefore different vertex indexing: digests intentionally differ
    // only when the canonical form differs
    REQUIRE(hypergraph_digest(a) == hypergraph_digest(a));
    REQUIRE(hypergraph_digest(parse_hypergraph_file(fixture("fig2.hg"))) ==
            hypergraph_digest(helpers::fig2()));
    REQUIRE(hypergraph_digest(a) != hypergraph_digest(helpers::fig2()));
}

TEST_CASE("cli: verify figure 2 exact") {
    auto r = run({"verify", fixture("fig2.hg"), "--exact", "--json"});
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["status"] == "ok");
    REQUIRE(j["results"]["alpha"] == 4);
    REQUIRE(j["results"]["d_prime"] == 4);
    REQUIRE(j["results"]["equal"] == true);
}

TEST_CASE("cli: bouquets from a given cover") {
    auto r = run({"bouquets", fixture("fig3.hg"), "--from-cover", "b,e", "--json"});
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    auto& bouquets = j["results"]["bouquet_set"]["bouquets"];
    REQUIRE(bouquets.size() == 2);
    REQUIRE(bouquets[0]["edges"].size() == 1);
    REQUIRE(bouquets[0]["flowers"] == nlohmann::json::array({"b"}));
    REQUIRE(bouquets[1]["flowers"] == nlohmann::json::array({"e"}));
    REQUIRE(j["results"]["bouquet_set"]["flower_set"] == nlohmann::json::array({"b", "e"}));
}

TEST_CASE("cli: pd over the rationals for the 3-path") {
    auto r = run({"pd", fixture("path3.hg"), "--field", "q"});
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("pd = 2") != std::string::npos);

    auto rj = run({"pd", fixture("path3.hg"), "--field", "q", "--json"});
    auto j = nlohmann::json::parse(rj.out);
    REQUIRE(j["results"]["pd"] == 2);
    REQUIRE(j["results"]["field"] == "q");
}

TEST_CASE("cli: covers, alpha, dprime, check text output") {
    REQUIRE(run({"check", fixture("fig2.hg")}).out.find("6 vertices, 4 edges") !=
            std::string::npos);
    REQUIRE(run({"alpha", fixture("fig2.hg")}).out.find("alpha0' = 4") != std::string::npos);
    REQUIRE(run({"dprime", fixture("fig3.hg")}).out.find("d' = 3") != std::string::npos);
    auto covers = run({"covers", fixture("path3.hg")});
    REQUIRE(covers.out.find("minimal covers (2)") != std::string::npos);
    REQUIRE(covers.out.find("b") != std::string::npos);
}

TEST_CASE("cli: stdin input") {
    auto r = run({"alpha"}, "a b\nb c\n");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("alpha0' = 2") != std::string::npos);
}

TEST_CASE("cli: the empty hypergraph is handled end to end") {
    auto r = run({"verify", "--exact", "--json"}, "# nothing here\n");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["results"]["alpha"] == 0);
    REQUIRE(j["results"]["d_prime"] == 0);
    REQUIRE(j["results"]["equal"] == true);
}

TEST_CASE("cli: gen output is consumable and seed-stable") {
    auto a = run({"gen", "--n", "6", "--m", "4", "--arity", "2..2", "--seed", "7"});
    auto b = run({"gen", "--n", "6", "--m", "4", "--arity", "2..2", "--seed", "7"});
    REQUIRE(a.exit_code == 0);
    REQUIRE(a.out == b.out);
    auto verify = run({"verify"}, a.out);
    REQUIRE(verify.exit_code == 0);

    auto j = run({"gen", "--n", "4", "--m", "3", "--arity", "2..2", "--seed", "3", "--json"});
    std::istringstream in(j.out);
    Hypergraph parsed = parse_hypergraph(in);
    REQUIRE(parsed.edge_count() >= 1);
}

TEST_CASE("cli: exit codes distinguish errors from size guards") {
    auto usage = run({"alpha", "--no-such-flag"});
    REQUIRE(usage.exit_code == 1);

    auto bad_file = run({"alpha", "/no/such/file.hg"});
    REQUIRE(bad_file.exit_code == 1);

    auto guarded = run({"covers", fixture("fig2.hg"), "--cap-vertices", "3"});
    REQUIRE(guarded.exit_code == 2);

    auto guarded_json = run({"covers", fixture("fig2.hg"), "--cap-vertices", "3", "--json"});
    REQUIRE(guarded_json.exit_code == 2);
    auto j = nlohmann::json::parse(guarded_json.out);
    REQUIRE(j["status"] == "size_guard");

    auto malformed = run({"check"}, "x\nx y\n");
    REQUIRE(malformed.exit_code == 1);
    REQUIRE(malformed.err.find("line 1") != std::string::npos);
}

TEST_CASE("cli: bad cover arguments are rejected before dispatch") {
    auto unknown = run({"bouquets", fixture("fig3.hg"), "--from-cover", "b,zz"});
    REQUIRE(unknown.exit_code == 1);
    REQUIRE(unknown.err.find("zz") != std::string::npos);

    auto not_minimal = run({"bouquets", fixture("fig3.hg"), "--from-cover", "a"});
    REQUIRE(not_minimal.exit_code == 1);
}

TEST_CASE("cli: env caps override") {
    setenv("BOUQUET_KIT_CAPS", "vertices=3", 1);
    auto guarded = run({"covers", fixture("fig2.hg")});
    unsetenv("BOUQUET_KIT_CAPS");
    REQUIRE(guarded.exit_code == 2);

    setenv("BOUQUET_KIT_CAPS", "vertices=3,broken", 1);
    auto bad = run({"covers", fixture("fig2.hg")});
    unsetenv("BOUQUET_KIT_CAPS");
    REQUIRE(bad.exit_code == 1);
}

TEST_CASE("cli: JSON reports are byte-identical across runs, timings aside") {
    for (const char* file : {"fig2.hg", "fig3.hg", "triangle.hg"}) {
        auto r1 = run({"verify", fixture(file), "--exact", "--json"});
        auto r2 = run({"verify", fixture(file), "--exact", "--json"});
        CAPTURE(file);
        REQUIRE(r1.exit_code == 0);
        REQUIRE(strip_timings(r1.out).dump() == strip_timings(r2.out).dump());
    }
}

TEST_CASE("cli: verify --pd reports the bound") {
    auto r = run({"verify", fixture("fig3.hg"), "--pd", "--json"});
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["results"]["pd_check"]["bound_holds"] == true);
    REQUIRE(j["results"]["pd_check"]["d_prime"] == 3);
    REQUIRE(j["results"]["pd_check"]["pd"] >= 3);
}
