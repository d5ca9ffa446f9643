// End-to-end CLI checks: spawns the `symdet` binary (path in argv[1]), parses
// its JSON output, and verifies exit codes. Returns nonzero on any failure.
#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "symdet/io.hpp"

namespace {

std::string g_cli;
int g_failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++g_failures;
        std::cerr << "FAIL: " << what << "\n";
    }
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = g_cli + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path write_file(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << text;
    return path;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_driver <path-to-symdet>\n";
        return 2;
    }
    g_cli = argv[1];

    const auto k4 = write_file("symdet_k4.json",
                               R"({"n":4,"directed":false,
                                   "edges":[[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]})");
    const auto triangle =
        write_file("symdet_tri.json", R"({"n":3,"directed":true,"edges":[[1,2],[2,3],[3,1]]})");
    const auto matrix = write_file("symdet_mat.json", R"json({
        "algebra": "mat:2", "n": 2,
        "entries": [[{"e(1,1)": "1"}, {"e(1,2)": "2/3"}],
                    [{"e(2,1)": "-1"}, {"e(2,2)": "1/2", "e(1,1)": "1"}]]})json");
    const auto formula = write_file(
        "symdet_formula.json",
        R"({"op":"mul","args":[{"var":"x"},{"op":"add","args":[{"var":"y"},{"const":"1"}]}]})");
    const auto monomial = write_file(
        "symdet_mono.json", R"({"k":1,"l":1,"factors":[[1,1,1,1],[2,2,1,1]]})");

    // count-ham: K4 has 3 Hamiltonian cycles.
    {
        const auto r = run("count-ham " + k4.string());
        expect(r.exit_code == 0, "count-ham exit");
        const auto doc = symdet::io::parse_json_text(r.out);
        expect(doc.at("hamiltonian_cycles") == 3, "count-ham value");
    }

    // count-cycles: 4 triangles in K4; diagnostics expose the k=2 raw sum.
    {
        const auto r = run("count-cycles " + k4.string() + " --k 3 --diagnostics");
        expect(r.exit_code == 0, "count-cycles exit");
        const auto doc = symdet::io::parse_json_text(r.out);
        expect(doc.at("cycles") == 4, "count-cycles value");
        expect(doc.contains("k2_coefficient_sum"), "count-cycles diagnostics");
    }

    // sdet: naive and fast must emit byte-identical documents.
    {
        const auto naive = run("sdet " + matrix.string() + " --method naive");
        const auto fast = run("sdet " + matrix.string() + " --method fast --threads 2");
        expect(naive.exit_code == 0 && fast.exit_code == 0, "sdet exit");
        const auto a = symdet::io::parse_json_text(naive.out);
        const auto b = symdet::io::parse_json_text(fast.out);
        expect(a.at("sdet") == b.at("sdet"), "sdet naive/fast agreement");
        // Same text modulo the method tag.
        auto strip = [](std::string s, const std::string& tag) {
            const auto pos = s.find(tag);
            if (pos != std::string::npos) s.erase(pos, tag.size());
            return s;
        };
        expect(strip(naive.out, "naive") == strip(fast.out, "fast"), "sdet byte identity");
    }

    // pme-check holds on a random-ish matrix and on a 3x3 over cycle:3.
    {
        const auto r = run("pme-check " + matrix.string());
        expect(r.exit_code == 0, "pme-check exit");
        expect(symdet::io::parse_json_text(r.out).at("holds") == true, "pme-check holds");
    }
    {
        auto alg = symdet::cycle_algebra(3);
        auto cyc = std::dynamic_pointer_cast<const symdet::CycleAlgebra>(alg);
        symdet::AlgMatrix<symdet::Rational> m(alg, 3);
        std::uint64_t s = 9;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                s = s * 6364136223846793005ULL + 1442695040888963407ULL;
                m.at(r, c) = symdet::AlgElement<symdet::Rational>::basis(
                    alg, static_cast<symdet::BasisIndex>(s % alg->dim()),
                    symdet::Rational(static_cast<long>(s % 5) - 2));
            }
        const auto cycfile = write_file("symdet_cyc3.json", symdet::io::matrix_to_json(m).dump());
        const auto r = run("pme-check " + cycfile.string());
        expect(r.exit_code == 0, "pme-check cycle:3 exit");
        expect(symdet::io::parse_json_text(r.out).at("holds") == true, "pme-check cycle:3 holds");
    }

    // hc-extract on the directed triangle: exactly one cycle word.
    {
        const auto r = run("hc-extract " + triangle.string());
        expect(r.exit_code == 0, "hc-extract exit");
        const auto poly = symdet::io::ncpoly_from_json(
            symdet::io::parse_json_text(r.out).at("hamiltonian_cycle_polynomial"));
        expect(poly.term_count() == 1, "hc-extract word count");
    }

    // family grid at m=2, n=2 re-parses; diagonal entries have 6 monomials.
    {
        const auto r = run("family --m 2 --n 2");
        expect(r.exit_code == 0, "family exit");
        const auto doc = symdet::io::parse_json_text(r.out);
        const auto t11 = symdet::io::cpoly_from_json(doc.at("T")[0][0]);
        expect(t11.term_count() == 6, "family T11 monomial count");
    }

    // coeff: 2*a11*d11 in T11 with the 1/2 normalization -> 1.
    {
        const auto r = run("coeff " + monomial.string());
        expect(r.exit_code == 0, "coeff exit");
        expect(symdet::io::parse_json_text(r.out).at("coefficient") == "1", "coeff value");
    }

    // gadget rosette / pipeline emit digraphs that re-parse.
    {
        const auto r = run("gadget rosette --indicators 3");
        expect(r.exit_code == 0, "rosette exit");
        const auto g = symdet::io::digraph_from_json(symdet::io::parse_json_text(r.out));
        expect(g.vertex_count() == 10, "rosette size");
    }
    {
        // x*(y+1) summed over y in {0,1} gives 3x.
        const auto r = run("gadget pipeline " + formula.string() + " --sum y");
        expect(r.exit_code == 0, "pipeline exit");
        const auto g = symdet::io::digraph_from_json(symdet::io::parse_json_text(r.out));
        symdet::NCPoly want = symdet::NCPoly::variable(symdet::VarId("x"));
        want.scale(symdet::Rational(3));
        expect(symdet::enumerate_hc_poly(g) == want, "pipeline polynomial");
    }

    // check-algebra on a builtin.
    {
        const auto r = run("check-algebra cycle:3");
        expect(r.exit_code == 0, "check-algebra exit");
        expect(symdet::io::parse_json_text(r.out).at("pass") == true, "check-algebra pass");
    }

    // Exit codes: malformed input -> 1, size cutoff -> 2.
    {
        const auto bad = write_file("symdet_bad.json", "{not json");
        expect(run("count-ham " + bad.string()).exit_code == 1, "malformed input exit 1");
        const auto big = write_file("symdet_k9.json", R"({"n":9,"directed":false,"edges":[]})");
        expect(run("count-ham " + big.string()).exit_code == 2, "cutoff exit 2");
        expect(run("count-cycles " + k4.string() + " --k 9").exit_code == 1, "bad k exit 1");
    }

    if (g_failures == 0) std::cout << "cli driver: all checks passed\n";
    return g_failures == 0 ? 0 : 1;
}
