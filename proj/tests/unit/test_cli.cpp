// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <map>

#include <json.hpp>

#include "cli/commands.hpp"
#include "dw/io/camera_json.hpp"
#include "dw/io/manifest.hpp"
#include "dw/io/pfm.hpp"
#include "support/testutil.hpp"

using namespace dw;
using dw::cli::run_cli;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

// byte map of every regular file under root, keyed by relative path
std::map<std::string, std::string> tree_bytes(const std::filesystem::path& root) {
    std::map<std::string, std::string> out;
    for (const auto& e : std::filesystem::recursive_directory_iterator(root))
        if (e.is_regular_file())
            out[std::filesystem::relative(e.path(), root).string()] = slurp(e.path().string());
    return out;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("synth + pipeline end-to-end: pairs, manifests, determinism") {
    dwtest::TempDir tmp("cli_e2e");
    const std::string data = tmp.file("data");

    REQUIRE(run_cli({"synth", "--scenes", "1", "--cams", "8", "--frames", "3", "--res",
                     "64x112", "--seed", "5", "--out", data}) == 0);

    nlohmann::ordered_json pairs;
    {
        std::ifstream in(data + "/pairs.json");
        REQUIRE(in.good());
        in >> pairs;
    }
    CHECK(pairs.at("pairs_per_scene").get<int>() == 7);  // 8 cameras, source excluded
    CHECK(pairs.at("scenes").size() == 1);

    // every camera's manifest validates
    for (int c = 0; c < 8; ++c) {
        char dir[16];
        std::snprintf(dir, sizeof dir, "cam_%02d", c);
        const io::Manifest m =
            io::load_manifest(data + "/scene_0000/" + dir + "/manifest.json");
        CHECK_NOTHROW(io::validate_manifest(m));
        CHECK(m.frames == 3);
    }

    const std::string scene = data + "/scene_0000";
    setenv("DW_THREADS", "2", 1);
    REQUIRE(run_cli({"pipeline", "--scene", scene, "--out", tmp.file("runA")}) == 0);
    setenv("DW_THREADS", "5", 1);
    REQUIRE(run_cli({"pipeline", "--scene", scene, "--out", tmp.file("runB")}) == 0);
    unsetenv("DW_THREADS");

    const auto ta = tree_bytes(tmp.file("runA"));
    const auto tb = tree_bytes(tmp.file("runB"));
    REQUIRE(ta.size() == tb.size());
    for (const auto& [rel, bytes] : ta) {
        REQUIRE(tb.count(rel) == 1);
        CHECK(tb.at(rel) == bytes);  // byte-identical across thread counts
    }

    // align on GT vs GT is the identity fit
    nlohmann::ordered_json alignment;
    {
        std::ifstream in(tmp.file("runA") + "/align/alignment.json");
        in >> alignment;
    }
    CHECK(alignment.at("s").get<double>() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::abs(alignment.at("b").get<double>()) < 1e-9);

    // 7 warp + 7 encode outputs, every manifest validates, no .partial left
    int warp_count = 0, partials = 0;
    for (const auto& e :
         std::filesystem::recursive_directory_iterator(tmp.file("runA"))) {
        if (e.path().filename() == "manifest.json") {
            CHECK_NOTHROW(io::validate_manifest(io::load_manifest(e.path().string())));
            if (e.path().parent_path().parent_path().filename() == "warp") ++warp_count;
        }
        if (e.path().filename() == ".partial") ++partials;
    }
    CHECK(warp_count == 7);
    CHECK(partials == 0);
}

TEST_CASE("pipeline: corrupt depth file fails the stage and leaves a marker") {
    dwtest::TempDir tmp("cli_fail");
    const std::string data = tmp.file("data");
    REQUIRE(run_cli({"synth", "--scenes", "1", "--cams", "2", "--frames", "3", "--res",
                     "48x48", "--seed", "1", "--out", data}) == 0);

    // truncate one source depth frame
    const std::string victim = data + "/scene_0000/cam_00/depth/00001.pfm";
    {
        const std::string bytes = slurp(victim);
        std::ofstream out(victim, std::ios::binary | std::ios::trunc);
        out.write(bytes.data(), std::streamsize(bytes.size() / 2));
    }

    const int rc = run_cli(
        {"pipeline", "--scene", data + "/scene_0000", "--out", tmp.file("run")});
    CHECK(rc != 0);
    CHECK(std::filesystem::exists(tmp.file("run") + "/align/.partial"));
}

TEST_CASE("align CLI recovers a constructed scale/shift from files") {
    dwtest::TempDir tmp("cli_align");
    Rng rng(3);
    const int w = 24, h = 16, n = 2;
    io::Manifest rel_man, met_man;
    rel_man.frames = met_man.frames = n;
    rel_man.width = met_man.width = w;
    rel_man.height = met_man.height = h;
    for (int t = 0; t < n; ++t) {
        DepthFrame d(w, h), x(w, h);
        for (int yy = 0; yy < h; ++yy)
            for (int xx = 0; xx < w; ++xx) {
                const double dv = rng.uniform(1.0, 9.0);
                d.set(xx, yy, dv);
                x.set(xx, yy, 1.0 / (1.8 / dv + 0.06));
            }
        const std::string dn = "rel_" + std::to_string(t) + ".pfm";
        const std::string xn = "met_" + std::to_string(t) + ".pfm";
        io::write_depth_pfm(d, tmp.file(dn));
        io::write_depth_pfm(x, tmp.file(xn));
        rel_man.streams["depth"].push_back(dn);
        met_man.streams["depth"].push_back(xn);
    }
    io::save_manifest(rel_man, tmp.file("rel.json"));
    io::save_manifest(met_man, tmp.file("met.json"));

    REQUIRE(run_cli({"align", "--relative", tmp.file("rel.json"), "--metric",
                     tmp.file("met.json"), "--out", tmp.file("alignment.json")}) == 0);
    nlohmann::ordered_json j;
    {
        std::ifstream in(tmp.file("alignment.json"));
        in >> j;
    }
    // PFM stores float32, so expect ~1e-6 relative accuracy
    CHECK(j.at("s").get<double>() == doctest::Approx(1.8).epsilon(1e-4));
    CHECK(j.at("b").get<double>() == doctest::Approx(0.06).epsilon(1e-3));
}

TEST_CASE("encode CLI: sidecar, deterministic bytes, augment determinism") {
    dwtest::TempDir tmp("cli_encode");
    const std::string data = tmp.file("data");
    REQUIRE(run_cli({"synth", "--scenes", "1", "--cams", "2", "--frames", "2", "--res",
                     "32x56", "--seed", "9", "--out", data}) == 0);
    const std::string depth_man = data + "/scene_0000/cam_00/manifest.json";

    REQUIRE(run_cli({"encode", "--depth", depth_man, "--out", tmp.file("e1"), "--augment",
                     "--seed", "77"}) == 0);
    REQUIRE(run_cli({"encode", "--depth", depth_man, "--out", tmp.file("e2"), "--augment",
                     "--seed", "77"}) == 0);
    CHECK(slurp(tmp.file("e1") + "/encoded/00000.png") ==
          slurp(tmp.file("e2") + "/encoded/00000.png"));
    CHECK(slurp(tmp.file("e1") + "/encoding.json") == slurp(tmp.file("e2") + "/encoding.json"));

    nlohmann::ordered_json sidecar;
    {
        std::ifstream in(tmp.file("e1") + "/encoding.json");
        in >> sidecar;
    }
    CHECK(sidecar.contains("norm_min"));
    CHECK(sidecar.contains("norm_max"));
    CHECK(sidecar.at("augment").contains("scale"));
    CHECK(sidecar.at("norm_min").get<double>() >= 0.5);
}

TEST_CASE("sample-traj CLI writes one camera file per trajectory plus specs") {
    dwtest::TempDir tmp("cli_traj");
    REQUIRE(run_cli({"sample-traj", "--lookat", "0,-1.5,0", "--frames", "7", "--seed", "4",
                     "--count", "3", "--out", tmp.file("cams.json")}) == 0);
    for (int i = 0; i < 3; ++i) {
        const auto cams =
            io::load_cameras(tmp.file("cams_0" + std::to_string(i) + ".json"));
        CHECK(cams.size() == 7);
    }
    nlohmann::ordered_json specs;
    {
        std::ifstream in(tmp.file("cams_specs.json"));
        REQUIRE(in.good());
        in >> specs;
    }
    CHECK(specs.size() == 3);
    CHECK(specs[0].contains("ranges"));

    // single trajectory goes exactly to --out
    REQUIRE(run_cli({"sample-traj", "--frames", "5", "--seed", "1", "--count", "1", "--out",
                     tmp.file("single.json")}) == 0);
    CHECK(io::load_cameras(tmp.file("single.json")).size() == 5);
}

TEST_CASE("metrics CLI: identical files give zeros, reserved fields present") {
    dwtest::TempDir tmp("cli_metrics");
    REQUIRE(run_cli({"sample-traj", "--frames", "6", "--seed", "2", "--count", "1", "--out",
                     tmp.file("a.json")}) == 0);
    REQUIRE(run_cli({"metrics", "--gt", tmp.file("a.json"), "--est", tmp.file("a.json"),
                     "--out", tmp.file("rep.json")}) == 0);
    nlohmann::ordered_json rep;
    {
        std::ifstream in(tmp.file("rep.json"));
        in >> rep;
    }
    CHECK(rep.at("rot_err").get<double>() == 0.0);
    CHECK(rep.at("trans_err").get<double>() == 0.0);
    CHECK(rep.at("cam_mc").get<double>() == 0.0);
    CHECK(rep.at("alignment_mode").get<std::string>() == "none");
    CHECK(rep.contains("rs"));
    CHECK(rep.contains("mat_pix"));
    CHECK(rep.contains("vbench"));
}

TEST_CASE("help exits cleanly for every subcommand") {
    for (const char* sub : {"align", "warp", "encode", "sample-traj", "metrics", "synth",
                            "pipeline"}) {
        CHECK(run_cli({sub, "--help"}) == 0);
    }
    CHECK(run_cli({"--help"}) == 0);
    CHECK(run_cli({"definitely-not-a-command"}) != 0);
}

}  // TEST_SUITE
