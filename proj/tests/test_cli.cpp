#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct run_result {
    int exit_code;
    std::string out;
};

run_result run(const std::string& args) {
    const std::string cmd = std::string(HILBAUT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json run_json(const std::string& args) {
    auto r = run(args + " --format json");
    REQUIRE(r.exit_code == 0);
    return nlohmann::json::parse(r.out);
}

} // namespace

TEST_CASE("lefschetz preset example") {
    auto r = run("lefschetz --preset k3-symplectic-3 --n 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "27\n");
}

TEST_CASE("aut-dim preset example") {
    auto r = run("aut-dim --preset torus-identity --n 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2\n");
}

TEST_CASE("fixed points json lists the isolated pairs") {
    auto doc = run_json("fixed-points --preset torus-involution --n 2");
    CHECK(doc["request"]["subcommand"] == "fixed-points");
    CHECK(doc["results"]["isolated_nondegenerate_count"] == 120);
    CHECK(doc["results"]["crosscheck"]["lefschetz"] == 144);
    CHECK(doc["results"]["crosscheck"]["remainder"] == 24);
    int isolated = 0;
    for (const auto& c : doc["results"]["components"])
        if (c["dimension"] == 0 && c["degenerate"] == false)
            ++isolated;
    CHECK(isolated == 120);
    CHECK(doc["results"]["components"].size() == 169);
}

TEST_CASE("output bytes are deterministic") {
    const std::string cmd = "fixed-points --preset k3-symplectic-5 --n 3 --format json";
    CHECK(run(cmd).out == run(cmd).out);
    const std::string tr = "trace-series --preset torus-involution --n 3 --format json";
    CHECK(run(tr).out == run(tr).out);
}

TEST_CASE("json output round trips as input") {
    auto doc = run_json("lefschetz --preset k3-symplectic-3 --n 2");
    const std::string path = "/tmp/hilbaut_roundtrip_input.json";
    {
        std::ofstream out(path);
        out << doc["request"]["input"].dump(2) << "\n";
    }
    auto again = run_json("lefschetz --input " + path + " --n 2");
    CHECK(again["results"] == doc["results"]);
    // and the expanded input re-serializes to the same document
    CHECK(again["request"]["input"] == doc["request"]["input"]);
    std::remove(path.c_str());
}

TEST_CASE("exit code two for parse failures") {
    CHECK(run("lefschetz --preset no-such-surface --n 1").exit_code == 2);
    CHECK(run("lefschetz --n 1").exit_code == 2); // neither --preset nor --input
    CHECK(run("lefschetz --preset k3-identity --format yaml").exit_code == 2);
    CHECK(run("").exit_code == 2); // a subcommand is required
    const std::string path = "/tmp/hilbaut_bad_input.json";
    {
        std::ofstream out(path);
        out << "{\"surface\": {\"betti\": [1, 0, 22]}}\n";
    }
    CHECK(run("lefschetz --input " + path).exit_code == 2);
    std::remove(path.c_str());
}

TEST_CASE("exit code three for validation failures") {
    const std::string path = "/tmp/hilbaut_invalid_input.json";
    {
        std::ofstream out(path);
        // 23 eigenvalues against b2 = 22
        nlohmann::json doc;
        doc["surface"]["betti"] = {1, 0, 22, 0, 1};
        doc["automorphism"]["order"] = 1;
        nlohmann::json ones = nlohmann::json::array();
        for (int i = 0; i < 23; ++i)
            ones.push_back(nlohmann::json::array({0, 1}));
        doc["automorphism"]["spectrum"]["0"] = {{0, 1}};
        doc["automorphism"]["spectrum"]["2"] = ones;
        doc["automorphism"]["spectrum"]["4"] = {{0, 1}};
        out << doc.dump() << "\n";
    }
    CHECK(run("lefschetz --input " + path + " --n 1").exit_code == 3);
    std::remove(path.c_str());
    CHECK(run("aut-dim --row 1,0,-1 --n 2").exit_code == 3);
}

TEST_CASE("exit code four for bound violations") {
    CHECK(run("fixed-points --preset torus-involution --n 9").exit_code == 4);
    CHECK(run("spectrum --preset k3-identity --n 2 --bound 10").exit_code == 4);
}

TEST_CASE("poincare csv has stable columns") {
    auto r = run("poincare --preset k3-identity --n 2 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("n,degree,betti\n", 0) == 0);
    CHECK(r.out.find("\n2,4,276\n") != std::string::npos);
    CHECK(r.out.find("\n2,2,23\n") != std::string::npos);
}

TEST_CASE("hodge row series in text form") {
    auto r = run("hodge --row 1,0,1 --n 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("n=2: 1 0 1 0 1\n") != std::string::npos);
    CHECK(r.out.find("next-to-top n=2: 0\n") != std::string::npos);
}

TEST_CASE("conjecture table output includes the middle entry") {
    auto r = run("conjecture --table 1,0,1,0,20,0,1,0,1 --n 2 --xmax 4 --ymax 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("t^2 x^2 y^2: 232\n") != std::string::npos);
    CHECK(r.out.find("t^2 x^1 y^1: 21\n") != std::string::npos);
}

TEST_CASE("trace series specializes to lefschetz numbers") {
    auto doc = run_json("trace-series --preset k3-symplectic-3 --n 2 --t-eval -1");
    bool found = false;
    for (const auto& term : doc["results"]["terms"])
        if (term["q"] == 2) {
            CHECK(term["value"]["integer"] == 27);
            found = true;
        }
    CHECK(found);
}

TEST_CASE("spectrum and entropy text output") {
    auto sp = run("spectrum --preset k3-identity --n 1");
    CHECK(sp.exit_code == 0);
    CHECK(sp.out.rfind("dimension: 24\n", 0) == 0);
    auto en = run("entropy --preset k3-identity --n 3");
    CHECK(en.exit_code == 0);
    CHECK(en.out == "spectral radius: 1\nentropy: 0\n");
}

TEST_CASE("cyclotomic json values carry root pairs") {
    auto doc = run_json("spectrum --preset k3-symplectic-5 --n 1");
    bool saw_root = false;
    for (const auto& entry : doc["results"]["eigenvalues"]) {
        if (entry["value"].contains("root") && entry["value"]["root"][1] == 5)
            saw_root = true;
        CHECK(entry["value"].contains("exact"));
        CHECK(entry["value"].contains("approx"));
    }
    CHECK(saw_root);
}

TEST_CASE("json embeds the request parameters") {
    auto doc = run_json("fixed-points --preset k3-symplectic-5 --n 3 --bound 6");
    CHECK(doc["request"]["parameters"]["n"] == 3);
    CHECK(doc["request"]["parameters"]["bound"] == 6);
    CHECK(doc["request"]["input"]["automorphism"]["order"] == 5);
    CHECK(doc.contains("provenance"));
    CHECK(doc.contains("warnings"));
    // the published figure note travels with the report
    bool mentions = false;
    for (const auto& note : doc["results"]["crosscheck"]["notes"])
        if (note.get<std::string>().find("36") != std::string::npos)
            mentions = true;
    CHECK(mentions);
}
