#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "commands.hpp"
#include "config.hpp"
#include "doctest.h"
#include "ingest.hpp"
#include "json.hpp"
#include "text.hpp"
#include "writers.hpp"
#include "tomatomp/error.hpp"

using namespace tomatomp;
using namespace tomatomp::cli;
namespace fs = std::filesystem;

namespace {

struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() / ("tomatomp_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string write(const std::string& name, const std::string& content) const {
    const fs::path p = dir / name;
    std::ofstream(p, std::ios::binary) << content;
    return p.string();
  }
};

const std::string kData = TOMATOMP_TEST_DATA;

}  // namespace

TEST_CASE("number parsing and formatting") {
  CHECK(parse_number("1.5") == 1.5);
  CHECK(parse_number(" -2 ") == -2.0);
  CHECK_FALSE(parse_number("1.5x").has_value());
  CHECK_FALSE(parse_number("").has_value());
  CHECK(std::isnan(*parse_number("nan")));
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1.0) == "1");
  CHECK(std::strtod(format_double(1.0 / 3.0).c_str(), nullptr) == 1.0 / 3.0);
  CHECK(split("a, b,,c", ',') == std::vector<std::string>{"a", "b", "", "c"});
}

TEST_CASE("points csv") {
  Scratch s;
  const auto p = s.write("pts.csv", "x,y,f\n0,0,1\n1,0,2\n\n0,1,3\n");
  const Dataset d = read_points_csv(p, {"f"}, {});
  CHECK(d.n_vertices == 3);
  REQUIRE(d.cloud);
  CHECK(d.cloud->dimension() == 2);
  CHECK_FALSE(d.graph);
  REQUIRE(d.fields.size() == 1);
  CHECK(d.fields[0].name == "f");
  CHECK(d.fields[0].field[2] == 3.0);

  const Dataset only_x = read_points_csv(p, {"f"}, {"x"});
  CHECK(only_x.cloud->dimension() == 1);
  CHECK_THROWS_AS(read_points_csv(p, {}, {}), InputError);
  CHECK_THROWS_AS(read_points_csv(p, {"g"}, {}), InputError);
}

TEST_CASE("malformed csv reports the line number") {
  Scratch s;
  const auto ragged = s.write("ragged.csv", "x,f\n0,1\n1\n");
  try {
    read_points_csv(ragged, {"f"}, {});
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  const auto word = s.write("word.csv", "x,f\n0,1\n\n1,abc\n");
  try {
    read_points_csv(word, {"f"}, {});
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(std::string(e.what()).find("word.csv:4") != std::string::npos);
  }
  CHECK_THROWS_AS(read_csv(s.write("dup.csv", "x,x\n1,2\n")), ParseError);
  CHECK_THROWS_AS(read_csv(s.write("empty.csv", "")), ParseError);
  CHECK_THROWS_AS(read_csv((s.dir / "missing.csv").string()), InputError);
}

TEST_CASE("nan field values are input errors") {
  Scratch s;
  const auto p = s.write("nan.csv", "x,f\n0,1\n1,nan\n");
  try {
    read_points_csv(p, {"f"}, {});
    FAIL("expected an input error");
  } catch (const ParseError&) {
    FAIL("NaN is not a syntax error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find(":3: NaN value in field 'f'") != std::string::npos);
  }
}

TEST_CASE("grid image csv") {
  Scratch s;
  const auto p = s.write("img.csv", "1,2\n3,4\n");
  const Dataset d = read_grid_csv(p, 4);
  CHECK(d.n_vertices == 4);
  REQUIRE(d.graph);
  CHECK(d.graph->n_edges() == 4);
  CHECK(d.fields[0].name == "pixel");
  CHECK(d.fields[0].field[3] == 4.0);
  CHECK(read_grid_csv(p, 8).graph->n_edges() == 6);
  CHECK_THROWS_AS(read_grid_csv(s.write("bad.csv", "1,2\n3\n"), 4), ParseError);
}

TEST_CASE("off mesh with a sidecar field table") {
  Scratch s;
  const auto mesh = s.write("tri.off", "OFF\n# a triangle\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 2\n");
  const auto fields = s.write("tri.csv", "hks\n0.5\n0.25\n1\n");
  const Dataset d = read_off_mesh(mesh, fields, {});
  CHECK(d.n_vertices == 3);
  REQUIRE(d.graph);
  CHECK(d.graph->n_edges() == 3);
  CHECK(d.graph->edge_length(1, 2) == doctest::Approx(std::sqrt(2.0)));
  CHECK(d.fields[0].field[2] == 1.0);

  CHECK_THROWS_AS(read_off_mesh(mesh, "", {}), InputError);
  CHECK_THROWS_AS(read_off_mesh(mesh, s.write("short.csv", "hks\n1\n"), {}), InputError);
  const auto bad_face = s.write("bad.off", "OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 7\n");
  try {
    read_off_mesh(bad_face, fields, {});
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 6);
  }
}

TEST_CASE("edge list graphs") {
  Scratch s;
  const auto edges = s.write("edges.csv", "u,v,length\n0,1,2\n1,2,0.5\n");
  const auto fields = s.write("f.csv", "a,b\n1,2\n3,4\n5,6\n");
  const Dataset d = read_graph_csv(edges, fields, {"b"});
  CHECK(d.n_vertices == 3);
  CHECK(d.graph->edge_length(0, 1) == 2.0);
  REQUIRE(d.fields.size() == 1);
  CHECK(d.fields[0].field[0] == 2.0);
  CHECK_THROWS_AS(read_graph_csv(s.write("far.csv", "u,v\n0,9\n"), fields, {}), ParseError);
}

TEST_CASE("labels, rankings and diagrams read back") {
  Scratch s;
  const auto labels = read_labels_csv(s.write("l.csv", "vertex_id,label\n1,7\n0,3\n"));
  CHECK(labels == std::vector<std::size_t>{3, 7});
  CHECK_THROWS_AS(read_labels_csv(s.write("dup.csv", "vertex_id,label\n0,1\n0,2\n")), ParseError);

  const Ranking r = read_ranking_csv(s.write("r.csv", "id,score\na,1\nb,3\n"));
  CHECK(r[0].id == "b");

  const PersistenceDiagram d{{4, 1, Vertex{3}, true}, {3, 2, Vertex{1}, false}};
  const auto p = s.write("d.json", diagram_json(d));
  CHECK(read_diagram_json(p) == d);
  CHECK_THROWS_AS(read_diagram_json(s.write("bad.json", "{\"pts\": []}")), InputError);
}

TEST_CASE("settings from flags and config files") {
  RunConfig cfg;
  apply_setting(cfg, "tau", "0.5");
  apply_setting(cfg, "q", "inf");
  apply_setting(cfg, "field", "a,b");
  apply_setting(cfg, "kind", "grid-image-csv");
  CHECK(cfg.tau == 0.5);
  CHECK(std::isinf(cfg.q));
  CHECK(cfg.fields == std::vector<std::string>{"a", "b"});
  CHECK(cfg.kind == InputKind::GridImageCsv);
  CHECK_THROWS_AS(apply_setting(cfg, "tau", "high"), InputError);
  CHECK_THROWS_AS(apply_setting(cfg, "colour", "red"), InputError);
  CHECK_THROWS_AS(apply_setting(cfg, "n-lines", "2.5"), InputError);

  Scratch s;
  const auto conf = s.write("run.conf", "# overrides\ntau = 0.25\n\nn-lines=7\n");
  apply_config_file(cfg, conf);
  CHECK(cfg.tau == 0.25);
  CHECK(cfg.n_lines == 7);
  try {
    apply_config_file(cfg, s.write("bad.conf", "tau=1\nnot a setting\n"));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }

  RunConfig bad;
  bad.tau = -1;
  CHECK_THROWS_AS(validate(bad), InputError);
  bad = RunConfig{};
  bad.d1 = 2.0;
  bad.d2 = 1.0;
  CHECK_THROWS_AS(validate(bad), InputError);
}

TEST_CASE("commands produce their artifacts") {
  RunConfig cfg;
  cfg.command = "cluster-mp";
  cfg.input = kData + "/two_patches.csv";
  cfg.fields = {"density", "expression"};
  cfg.delta = 0.75;
  cfg.tau = 0.2;
  cfg.n_lines = 20;
  cfg.truth_labels = kData + "/two_patches_truth.csv";
  const Outputs out = run(cfg);
  for (const char* name : {"labels.csv", "diagram.json", "summands.json", "diagram.svg", "metrics.json"}) {
    CHECK(out.count(name) == 1);
  }
  const auto metrics = nlohmann::json::parse(out.at("metrics.json"));
  CHECK(metrics["ari"].get<double>() == 1.0);
  const auto summands = nlohmann::json::parse(out.at("summands.json"));
  CHECK(summands["lines"].size() == 20);
  // identical runs are byte-identical
  CHECK(run(cfg) == out);

  cfg.command = "cluster";
  cfg.fields = {"density"};
  const Outputs single = run(cfg);
  CHECK(single.count("summands.json") == 0);
  CHECK(single.at("labels.csv").rfind("vertex_id,label\n", 0) == 0);

  cfg.command = "rank";
  cfg.fields = {"density", "expression"};
  cfg.truth_labels.clear();
  const Outputs ranked = run(cfg);
  CHECK(ranked.at("ranking.csv").rfind("id,score\n", 0) == 0);

  cfg.delta = 0.0;
  CHECK_THROWS_AS(run(cfg), InputError);
  cfg.command = "frobnicate";
  CHECK_THROWS_AS(run(cfg), InputError);
}

TEST_CASE("svg band overlay") {
  const PersistenceDiagram d{{4, 1, Vertex{3}, true}, {3, 2, Vertex{1}, false}};
  const std::string plain = diagram_svg(d, std::nullopt, std::nullopt);
  const std::string band = diagram_svg(d, 0.5, 1.5);
  CHECK(plain.rfind("<svg", 0) == 0);
  CHECK(plain.find("<polygon") == std::string::npos);
  CHECK(band.find("<polygon") != std::string::npos);
}

TEST_CASE("failed runs write nothing") {
  Scratch s;
  RunConfig cfg;
  cfg.command = "cluster";
  cfg.input = (s.dir / "nope.csv").string();
  cfg.fields = {"f"};
  cfg.delta = 1.0;
  cfg.out = (s.dir / "out").string();
  CHECK_THROWS_AS(write_outputs(cfg.out, run(cfg)), InputError);
  CHECK_FALSE(fs::exists(cfg.out));
}
