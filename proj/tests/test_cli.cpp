#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "crcs/cli.hpp"
#include "crcs/cograph.hpp"
#include "crcs/io.hpp"
#include "crcs/split_kernel.hpp"
#include "helpers.hpp"

using namespace crcs;
using namespace testing;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text)
{
    const fs::path dir = fs::temp_directory_path() / "crcs_cli_tests";
    fs::create_directories(dir);
    const fs::path p = dir / name;
    io::write_file(p.string(), text);
    return p.string();
}

std::string temp_path(const std::string& name)
{
    return (fs::temp_directory_path() / "crcs_cli_tests" / name).string();
}

std::vector<std::string> lines(const std::string& s)
{
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);)
        out.push_back(l);
    return out;
}

} // namespace

TEST_CASE("solve with oracle witness")
{
    const auto file = temp_file("fig1.crcs", io::format_crcs(fig1()));
    const Run r = run({"solve", file, "--solver", "oracle", "--witness"});
    CHECK(r.code == cli::kYes);
    CHECK(lines(r.out) == std::vector<std::string>{"YES", "swap 4 5", "swap 1 3", "swap 2 4"});
}

TEST_CASE("solve exit codes")
{
    const Instance f = fig1();
    const auto invalid = temp_file("invalid.crcs", "crcs 1\nk 3\nn 3\nedge 0 1\nedge 1 2\nfs 1 2 3\nft 1 2 1\n");
    for (const char* solver : {"auto", "oracle"}) {
        const Run r = run({"solve", invalid, "--solver", solver});
        CHECK(r.code == cli::kNo);
        CHECK(lines(r.out) == std::vector<std::string>{"NO"});
    }
    const auto file = temp_file("fig1.crcs", io::format_crcs(f));
    CHECK(run({"solve", file, "--solver", "path"}).code == cli::kError);
    CHECK(run({"solve", file, "--solver", "cograph"}).code == cli::kError);
    CHECK(run({"solve", file, "--solver", "k2"}).code == cli::kError);
    const Run over = run({"solve", file, "--solver", "oracle", "--budget", "2"});
    CHECK(over.code == cli::kOverflow);
    CHECK(over.out.rfind("OVERFLOW", 0) == 0);
    CHECK(run({"solve", temp_path("missing.crcs")}).code == cli::kError);
    CHECK(run({"solve", temp_file("bad.crcs", "crcs 1\nk 2\n")}).code == cli::kError);
    CHECK(run({"solve", file, "--solver", "magic"}).code == cli::kError);
    CHECK(run({}).code == cli::kError);
}

TEST_CASE("auto dispatch picks the class solver")
{
    const auto path = temp_file("path.crcs", "crcs 1\nk 3\nn 3\nedge 0 1\nedge 1 2\nfs 1 2 3\nft 3 2 1\n");
    Run r = run({"solve", path});
    CHECK(r.code == cli::kYes);
    CHECK(r.err.find("solver: path") != std::string::npos);
    const auto k2 = temp_file("k2.crcs", "crcs 1\nk 2\nn 2\nedge 0 1\nfs 1 2\nft 2 1\n");
    CHECK(run({"solve", k2}).err.find("solver: k2") != std::string::npos);
    const auto star = temp_file("star.crcs", "crcs 1\nk 3\nn 4\nedge 0 3\nedge 1 3\nedge 2 3\nfs 1 1 3 2\nft 3 1 1 2\n");
    r = run({"solve", star});
    CHECK(r.code == cli::kNo);
    CHECK(r.err.find("solver: cograph") != std::string::npos);
    CHECK(run({"solve", star, "--solver", "split"}).code == cli::kNo);
    const auto file = temp_file("fig1.crcs", io::format_crcs(fig1()));
    r = run({"solve", file, "--witness"});
    CHECK(r.code == cli::kYes);
    CHECK(r.err.find("solver: oracle") != std::string::npos);
    const auto ext = temp_file("ext.crcs", "crcs 1\nk 1\nn 2\nedge 0 1\nfs * 1\nft 1 *\n");
    CHECK(run({"solve", ext}).code == cli::kYes);
    CHECK(run({"solve", ext, "--solver", "oracle", "--witness"}).out == "YES\nswap 0 1\n");
}

TEST_CASE("solve with a supplied cotree")
{
    const auto star = temp_file("star.crcs", "crcs 1\nk 3\nn 4\nedge 0 3\nedge 1 3\nedge 2 3\nfs 1 1 3 2\nft 1 1 3 2\n");
    const auto good = temp_file("star.cotree", "(J (U 0 1 2) 3)\n");
    const auto bad = temp_file("bad.cotree", "(U 0 1 2 3)\n");
    CHECK(run({"solve", star, "--solver", "cograph", "--cotree", good}).code == cli::kYes);
    CHECK(run({"solve", star, "--solver", "cograph", "--cotree", bad}).code == cli::kError);
}

TEST_CASE("kernelize")
{
    const auto big = temp_file("k13.crcs", "crcs 1\nk 2\nn 4\nedge 0 1\nedge 0 2\nedge 0 3\nfs 2 1 1 1\nft 2 1 1 1\n");
    const auto out = temp_path("k13.kernel");
    const auto log = temp_path("k13.log");
    Run r = run({"kernelize", big, "-o", out, "--log", log});
    CHECK(r.code == cli::kYes);
    CHECK(io::read_file(log) == "removed 3\n");
    const Instance kernel = io::parse_crcs(io::read_file(out));
    CHECK(kernel.graph.n() == 3);
    r = run({"kernelize", out});
    CHECK(r.code == cli::kYes);
    CHECK(r.out == io::read_file(out));
    CHECK(r.err.empty());

    const auto frozen = temp_file("frozen.crcs", "crcs 1\nk 3\nn 4\nedge 0 3\nedge 1 3\nedge 2 3\nfs 1 1 3 2\nft 3 1 1 2\n");
    r = run({"kernelize", frozen});
    CHECK(r.code == cli::kNo);
    CHECK(r.out == "NO\n");
    const auto c4 = temp_file("c4.crcs", "crcs 1\nk 2\nn 4\nedge 0 1\nedge 1 2\nedge 2 3\nedge 0 3\nfs 1 2 1 2\nft 1 2 1 2\n");
    CHECK(run({"kernelize", c4}).code == cli::kError);
}

TEST_CASE("reduce writes deterministic, re-parsable output and a layout")
{
    const auto ts = temp_file("p3.ts", "ts 1\nn 3\nedge 0 1\nedge 1 2\nis 0 2\nit 0 2\n");
    const auto layout = temp_path("p3.layout");
    Run a = run({"reduce", "ts-split", ts, "--layout", layout});
    CHECK(a.code == cli::kYes);
    CHECK(io::parse_crcs(a.out).graph.n() == 4);
    CHECK(io::read_file(layout) == "role universal 3\n");
    CHECK(run({"reduce", "ts-split", ts}).out == a.out);

    Run b = run({"reduce", "ts-bipartite", ts});
    CHECK(b.code == cli::kYes);
    CHECK(io::parse_crcs(b.out).graph.n() == 9);

    const auto svr = temp_file("one.svr", "svr 1\nk 2\nn 1\nfs 1\nft 2\n");
    Run c = run({"reduce", "svr-chordal", svr});
    CHECK(c.out == "crcs 1\nk 2\nn 2\nedge 0 1\nfs 1 2\nft 2 1\n");

    io::NclInstance ncl{prism_machine(), prism_orientation(), prism_orientation()};
    const auto machine = temp_file("prism.ncl", io::format_ncl(ncl));
    const auto ncl_layout = temp_path("prism.layout");
    Run d = run({"reduce", "ncl", machine, "--layout", ncl_layout});
    CHECK(d.code == cli::kYes);
    CHECK(io::parse_crcs(d.out).graph.n() == 195);
    const auto sidecar = lines(io::read_file(ncl_layout));
    CHECK(sidecar.size() == 195 + 9);
    CHECK(sidecar.front().rfind("role m0.u_0 ", 0) == 0);
    CHECK(run({"reduce", "ncl", machine}).out == d.out);

    const auto broken = temp_file("broken.ncl", "ncl 1\nvertex 0 and\nvertex 1 and\nedge 0 0 1 1\ncs 0 1\nct 0 1\n");
    CHECK(run({"reduce", "ncl", broken}).code == cli::kError);
    CHECK(run({"reduce", "ts-split", temp_file("c4.ts", "ts 1\nn 4\nedge 0 1\nedge 1 2\nedge 2 3\nedge 0 3\nis 0 2\nit 1 3\n")}).code ==
          cli::kError);
}

TEST_CASE("gen is reproducible and produces the requested classes")
{
    const Run a = run({"gen", "path", "6", "--k", "3", "--seed", "7"});
    CHECK(a.code == cli::kYes);
    CHECK(run({"gen", "path", "6", "--k", "3", "--seed", "7"}).out == a.out);
    CHECK(is_path_graph(io::parse_crcs(a.out).graph));
    const Run c = run({"gen", "cograph", "--n", "8", "--seed", "1"});
    REQUIRE(c.code == cli::kYes);
    CHECK_NOTHROW(cograph::build_cotree(io::parse_crcs(c.out).graph));
    const Run s = run({"gen", "split", "--n", "10"});
    REQUIRE(s.code == cli::kYes);
    CHECK_NOTHROW(split::split_partition(io::parse_crcs(s.out).graph));
    const Run v = run({"gen", "random", "--n", "7", "--k", "3", "--seed", "3", "--valid", "--p", "0.3"});
    REQUIRE(v.code == cli::kYes);
    CHECK(is_valid(io::parse_crcs(v.out)));
    CHECK(run({"gen", "random", "--n", "5", "--k", "1", "--p", "1"}).code == cli::kError);
    CHECK(run({"gen", "torus"}).code == cli::kError);
}
