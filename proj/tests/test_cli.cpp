#include "doctest.h"

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "mec2/formats.hpp"
#include "mec2/generators.hpp"

using namespace mec2;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("mec2_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string put(const std::string& name, const std::string& text) const {
    write_text((path / name).string(), text);
    return (path / name).string();
  }
};

}  // namespace

TEST_CASE("solve prints value and coloring") {
  TempDir dir;
  auto file = dir.put("p.gr", emit_graph(gen_named("petersen")));
  for (std::string engine : {"auto", "brute", "cyclespace", "branchdp"}) {
    auto r = cli({"solve", file, "--engine", engine});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("value 9\n", 0) == 0);
  }
  auto col = dir.path / "c.txt";
  auto j = cli({"solve", file, "--json", "--coloring-out", col.string()});
  REQUIRE(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["value"] == 9);
  CHECK(doc["coloring_path"] == col.string());
  CHECK(doc.contains("millis"));
  CHECK(parse_coloring(read_text(col.string())).value() == 9);
  auto chk = cli({"check", file, col.string()});
  CHECK(chk.code == 0);
  CHECK(chk.out == "valid value 9\n");
}

TEST_CASE("explicit engine mismatch warns") {
  TempDir dir;
  auto file = dir.put("k5.gr", emit_graph(gen_named("k5")));
  auto r = cli({"solve", file, "--engine", "cyclespace"});
  CHECK(r.code == 0);
  CHECK(r.err.find("warning") != std::string::npos);
}

TEST_CASE("task instances report welfare and reject k != 2") {
  TempDir dir;
  auto ok = dir.put("t.t2atc", "tasks 3 3 2\ntask 0 1\ntask 1 2\ntask 0 2\n");
  auto r = cli({"solve", ok});
  CHECK(r.code == 0);
  CHECK(r.out.find("social_welfare 4") != std::string::npos);
  auto j = cli({"solve", ok, "--json"});
  CHECK(nlohmann::json::parse(j.out)["social_welfare"] == 4);
  auto bad = dir.put("b.t2atc", "tasks 3 1 3\ntask 0 1\n");
  auto e = cli({"solve", bad});
  CHECK(e.code == 2);
  CHECK(e.err.rfind("error: unsupported:", 0) == 0);
}

TEST_CASE("errors map to categories") {
  TempDir dir;
  auto broken = dir.put("x.gr", "p 2 1\ne 0 5\n");
  auto r = cli({"solve", broken});
  CHECK(r.code == 2);
  CHECK(r.err.find("error: parse: line 2") == 0);
  auto big = dir.put("big.gr", emit_graph(gen_named("complete", 9)));
  auto ref = cli({"solve", big, "--engine", "brute"});
  CHECK(ref.code == 2);
  CHECK(ref.err.find("error: refused:") != std::string::npos);
  CHECK(cli({"solve"}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  auto dense = cli({"solve", broken, "--engine", "nope"});
  CHECK(dense.code == 2);
}

TEST_CASE("decide and deletion subcommands") {
  TempDir dir;
  auto p = dir.put("p.gr", emit_graph(gen_named("petersen")));
  CHECK(cli({"decide", p, "--t", "9"}).code == 0);
  auto no = cli({"decide", p, "--t", "10"});
  CHECK(no.code == 1);
  CHECK(no.out == "no\n");
  auto k4 = dir.put("k4.gr", emit_graph(gen_named("k4")));
  auto yes = cli({"delete-edges", k4, "--k", "2"});
  CHECK(yes.code == 0);
  CHECK(yes.out.rfind("yes\nX: ", 0) == 0);
  CHECK(cli({"delete-edges", k4, "--k", "1"}).code == 1);
  CHECK(cli({"delete-vertices", k4, "--k", "1"}).code == 1);
  CHECK(cli({"delete-vertices", k4, "--k", "2"}).code == 0);
  CHECK(cli({"delete-vertices", k4, "--minimize"}).code == 0);
  CHECK(cli({"delete-edges", k4}).code == 2);
}

TEST_CASE("gen and bench") {
  auto g = cli({"gen", "cubic", "--n", "8", "--seed", "3"});
  REQUIRE(g.code == 0);
  CHECK(is_cubic(parse_graph(g.out)));
  CHECK(cli({"gen", "cubic", "--n", "8", "--seed", "3"}).out == g.out);
  auto c = cli({"gen", "cycle(3)", "--copies", "2", "--join"});
  CHECK(parse_graph(c.out).vertex_count() == 7);

  TempDir dir;
  dir.put("a.gr", emit_graph(gen_named("petersen")));
  dir.put("b.gr", emit_graph(gen_named("complete", 8)));
  auto b = cli({"bench", dir.path.string(), "--engines", "cyclespace,brute", "--stats"});
  REQUIRE(b.code == 0);
  std::istringstream lines(b.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "instance,n,m,engine,value,millis,feedback,width,ops");
  std::vector<std::string> rows;
  for (std::string line; std::getline(lines, line);) rows.push_back(line);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].rfind("a.gr,10,15,cyclespace,9,", 0) == 0);
  CHECK(rows[3].find("brute,refused") != std::string::npos);
}
