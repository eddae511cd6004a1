#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cmposet/cache.hpp"
#include "cmposet/lattice_posets.hpp"
#include "cmposet/poset_io.hpp"
#include "cmposet/report.hpp"
#include "cmposet/version.hpp"

using namespace cmposet;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    auto dir = fs::temp_directory_path() / ("cmposet_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args) {
    const char* cli = std::getenv("CMPOSET_CLI");
    REQUIRE_MESSAGE(cli != nullptr, "CMPOSET_CLI is not set");
    const int status = std::system((std::string(cli) + " " + args).c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

FinitePoset diamond() {
    std::vector<Relation> rel{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
    return FinitePoset::from_relations({"bottom", "left", "right", "top"}, rel).with_standard_height();
}

}  // namespace

TEST_CASE("text and structured round trips") {
    const auto p = diamond();
    CHECK(read_text(write_text(p)) == p);
    CHECK(poset_from_json(to_json(p)) == p);
    const auto plain = p.without_height();
    CHECK(read_text(write_text(plain)) == plain);
    CHECK(to_json(p)["size"] == 4);
    CHECK(to_json(p)["hasse"].size() == 4);

    CHECK_THROWS_AS(read_text("poset 2\na\t0\n"), FormatError);
    CHECK_THROWS_AS(read_text("graph 1\n"), FormatError);
    CHECK_THROWS_AS(read_text("poset 1\na\t0\nhasse 1\n0 5\n"), FormatError);
    CHECK_THROWS_AS(read_text("poset 2\na\t-\nb\t-\nhasse 2\n0 1\n1 0\n"), std::exception);
}

TEST_CASE("dot output") {
    const auto two = FinitePoset::chain({"a", "b"});
    const auto dot = write_dot(two);
    std::size_t nodes = 0;
    std::size_t edges = 0;
    std::istringstream in(dot);
    for (std::string line; std::getline(in, line);) {
        if (line.find("->") != std::string::npos)
            ++edges;
        else if (line.find("label=") != std::string::npos)
            ++nodes;
    }
    CHECK(nodes == 2);
    CHECK(edges == 1);
    std::vector<std::string> many;
    for (int i = 0; i < 401; ++i) many.push_back(std::to_string(i));
    CHECK_THROWS_AS(write_dot(FinitePoset::antichain(many)), FormatError);
    CHECK_NOTHROW(write_dot(FinitePoset::antichain(many), 500));
}

TEST_CASE("triplet round trip") {
    IntMatrix dense = IntMatrix::Zero(3, 4);
    dense(0, 1) = 2;
    dense(2, 1) = -1;
    dense(1, 3) = 5;
    const auto m = SparseIntMatrix::from_dense(dense);
    const auto text = write_triplets(m);
    CHECK(text.rfind("3 4 3\n", 0) == 0);
    const auto back = read_triplets(text);
    CHECK(back.rows == 3);
    CHECK(back.cols == 4);
    CHECK(back.nonzeros() == 3);
    CHECK(back.to_dense() == dense);
    CHECK_THROWS_AS(read_triplets("2 2 1\n5 0 1\n"), FormatError);
    CHECK_THROWS_AS(read_triplets("2 2 2\n0 0 1\n"), FormatError);
}

TEST_CASE("poset cache") {
    const auto dir = scratch("cache");
    const CacheKey key{"U", "F2", 2, ""};
    int builds = 0;
    auto build = [&] {
        ++builds;
        return build_U(SymplecticModule::standard(ScalarRing::prime_field(2), 2)).poset;
    };
    PosetCache cache(dir.string(), "1.0");
    const auto first = cache.get_or_build(key, build);
    const auto second = cache.get_or_build(key, build);
    CHECK(first == second);
    CHECK(builds == 1);
    CHECK(cache.hits() == 1);
    CHECK(cache.misses() == 1);
    CHECK(fs::exists(cache.entry_path(key)));

    PosetCache bumped(dir.string(), "1.1");
    CHECK(bumped.entry_path(key) != cache.entry_path(key));
    bumped.get_or_build(key, build);
    CHECK(bumped.misses() == 1);
    CHECK(builds == 2);

    {
        std::ofstream out(cache.entry_path(key), std::ios::binary | std::ios::trunc);
        out << "garbage";
    }
    PosetCache reopened(dir.string(), "1.0");
    CHECK(reopened.get_or_build(key, build) == first);
    CHECK(reopened.misses() == 1);
    CHECK(reopened.warnings().size() == 1);
    CHECK(builds == 3);
    PosetCache healed(dir.string(), "1.0");
    healed.get_or_build(key, build);
    CHECK(healed.hits() == 1);

    // flip one byte of the body: the checksum catches it
    auto text = slurp(cache.entry_path(key));
    text[text.size() - 3] = text[text.size() - 3] == '1' ? '2' : '1';
    {
        std::ofstream out(cache.entry_path(key), std::ios::binary | std::ios::trunc);
        out << text;
    }
    PosetCache tampered(dir.string(), "1.0");
    tampered.get_or_build(key, build);
    CHECK(tampered.warnings().size() == 1);

    const CacheKey big{"U", "F2", 3, ""};
    PosetCache v(dir.string(), library_version);
    auto build3 = [] { return build_U(SymplecticModule::standard(ScalarRing::prime_field(2), 3)).poset; };
    v.get_or_build(big, build3);
    CHECK(v.get_or_build(big, build3, true).size() == 674);
    CHECK_THROWS_AS(v.get_or_build(big, [] { return FinitePoset::chain({"x"}); }, true), std::logic_error);

    CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
    fs::remove_all(dir);
}

TEST_CASE("report serialisation") {
    VerificationReport r;
    r.suite = "demo";
    r.claims.push_back({"a", "first", VerdictStatus::verified, VerdictBasis::homology_only, "", {{"n", 1}}, 0.5});
    r.claims.push_back({"b", "second", VerdictStatus::inconclusive, VerdictBasis::homology_only, "budget", {}, 0.1});
    CHECK(r.overall() == VerdictStatus::inconclusive);
    CHECK(exit_code(r.overall()) == 2);
    r.claims.push_back({"c", "third", VerdictStatus::refuted, VerdictBasis::homology_pi1, "", {}, 0.1});
    CHECK(r.overall() == VerdictStatus::refuted);
    CHECK(exit_code(VerdictStatus::refuted) == 1);
    CHECK(exit_code(VerdictStatus::verified) == 0);
    const auto j = r.to_json();
    CHECK(j["suite"] == "demo");
    CHECK(j["claims"].size() == 3);
    CHECK(j.dump().find("seconds") == std::string::npos);
    CHECK(r.timings_json().dump().find("0.5") != std::string::npos);

    SuiteConfig bad;
    bad.genus = -1;
    CHECK_THROWS(bad.validate());
}

TEST_CASE("command line") {
    const auto dir = scratch("cli");
    const auto out = dir / "reports";
    CHECK(run_cli("um --genus 2 --seed 17 --out " + out.string() + " > /dev/null") == 0);
    const auto report = nlohmann::json::parse(slurp(out / "um.json"));
    CHECK(report["config"]["seed"] == 17);
    CHECK(report["overall"] == "verified");
    CHECK(fs::exists(out / "um.timings.json"));

    const auto first = slurp(out / "um.json");
    CHECK(run_cli("um --genus 2 --seed 17 --out " + out.string() + " > /dev/null") == 0);
    CHECK(slurp(out / "um.json") == first);

    CHECK(run_cli("um --genus 2 --budget 10 --out " + out.string() + " > /dev/null") == 2);
    CHECK(run_cli("no-such-suite > /dev/null 2>&1") == 3);
    CHECK(run_cli("um --ring q9 --out " + out.string() + " > /dev/null 2>&1") == 3);

    const auto u = dir / "u.json";
    CHECK(run_cli("export U --genus 2 --format structured --out " + u.string()) == 0);
    const auto j = nlohmann::json::parse(slurp(u));
    CHECK(j["size"] == 22);
    CHECK(j["elements"].size() == 22);
    const auto u2 = dir / "u2.json";
    CHECK(run_cli("export U --genus 2 --format structured --out " + u2.string()) == 0);
    CHECK(slurp(u) == slurp(u2));

    const auto txt = dir / "i.txt";
    CHECK(run_cli("export I --genus 2 --format text --out " + txt.string()) == 0);
    CHECK(read_text(slurp(txt)).size() == 105);

    CHECK(run_cli("export D --genus 3 --format dot --out " + (dir / "d.dot").string() + " 2> /dev/null") == 3);
    CHECK(run_cli("export D --genus 2 --format dot --out " + (dir / "d.dot").string()) == 0);
    CHECK(slurp(dir / "d.dot").find("digraph") != std::string::npos);
    CHECK(run_cli("export T --size 3 --format triplets --out " + (dir / "t.trip").string()) == 0);
    CHECK_FALSE(slurp(dir / "t.trip").empty());

    const auto cache = dir / "cache";
    CHECK(run_cli("export U --genus 2 --cache " + cache.string() + " --out " + (dir / "c1.txt").string()) == 0);
    CHECK(run_cli("export U --genus 2 --cache " + cache.string() + " --out " + (dir / "c2.txt").string()) == 0);
    CHECK(slurp(dir / "c1.txt") == slurp(dir / "c2.txt"));
    CHECK(std::distance(fs::directory_iterator(cache), fs::directory_iterator{}) == 1);

    CHECK(run_cli("homology partitions --size 4 > " + (dir / "h.json").string()) == 0);
    const auto h = nlohmann::json::parse(slurp(dir / "h.json"));
    CHECK(h.dump().find("betti") != std::string::npos);
    CHECK(run_cli("--version > /dev/null") == 0);
    fs::remove_all(dir);
}
