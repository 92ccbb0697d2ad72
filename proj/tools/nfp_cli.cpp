#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "nfp/boolean.hpp"
#include "nfp/decompose.hpp"
#include "nfp/io.hpp"
#include "nfp/merge.hpp"
#include "nfp/oracle.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty()) {
        std::cout << data;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << data;
}

nfp::PieceDocument load_piece(const std::string& path) {
    std::vector<std::string> warnings;
    nfp::PieceDocument doc = nfp::parse_piece(read_file(path), &warnings);
    for (const std::string& w : warnings) std::cerr << path << ": " << w << "\n";
    if (doc.name.empty()) doc.name = path;
    return doc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"No-fit polygon generation for irregular pieces"};
    app.require_subcommand(1);

    std::string path_a, path_b, out_path, svg_path, op_name;
    double epsilon_rel = nfp::NfpConfig{}.epsilon_rel;
    int grid_n = 64;

    CLI::App* cmd_nfp = app.add_subcommand("nfp", "Complete no-fit polygon of two pieces");
    cmd_nfp->add_option("stationary", path_a)->required();
    cmd_nfp->add_option("orbital", path_b)->required();
    cmd_nfp->add_option("--out", out_path, "Result document path (default stdout)");
    cmd_nfp->add_option("--svg", svg_path, "Also render the result as SVG");
    cmd_nfp->add_option("--epsilon", epsilon_rel, "Relative snap tolerance");

    CLI::App* cmd_bool = app.add_subcommand("boolean", "Boolean operation on two pieces");
    cmd_bool->add_option("op", op_name)->required()->check(CLI::IsMember({"or", "and", "xor", "not"}));
    cmd_bool->add_option("a", path_a)->required();
    cmd_bool->add_option("b", path_b)->required();
    cmd_bool->add_option("--out", out_path, "Result document path (default stdout)");
    cmd_bool->add_option("--svg", svg_path, "Also render the result as SVG");
    cmd_bool->add_option("--epsilon", epsilon_rel, "Relative snap tolerance");

    CLI::App* cmd_dec = app.add_subcommand("decompose", "Convex decomposition of one piece");
    cmd_dec->add_option("piece", path_a)->required();
    cmd_dec->add_option("--out", out_path, "Result document path (default stdout)");
    cmd_dec->add_option("--svg", svg_path, "Also render the components as SVG");
    cmd_dec->add_option("--epsilon", epsilon_rel, "Relative snap tolerance");

    CLI::App* cmd_val = app.add_subcommand("validate", "Check the NFP against a grid oracle");
    cmd_val->add_option("stationary", path_a)->required();
    cmd_val->add_option("orbital", path_b)->required();
    cmd_val->add_option("--grid", grid_n, "Samples per axis");
    cmd_val->add_option("--epsilon", epsilon_rel, "Relative snap tolerance");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_nfp->parsed()) {
            const nfp::PieceDocument a = load_piece(path_a);
            const nfp::PieceDocument b = load_piece(path_b);
            const nfp::NfpConfig cfg{epsilon_rel};
            nfp::NfpDocument doc;
            doc.stationary = a.name;
            doc.orbital = b.name;
            doc.result = nfp::gen_nfp(a.piece, b.piece, cfg);
            doc.epsilon = nfp::nfp_epsilon(a.piece, b.piece, cfg);
            write_output(out_path, nfp::serialize_nfp(doc));
            if (!svg_path.empty()) write_output(svg_path, nfp::render_svg(doc.result));
        } else if (cmd_bool->parsed()) {
            const nfp::PieceDocument a = load_piece(path_a);
            const nfp::PieceDocument b = load_piece(path_b);
            nfp::BoolOpKind op = nfp::BoolOpKind::OR;
            if (op_name == "and") op = nfp::BoolOpKind::AND;
            else if (op_name == "xor") op = nfp::BoolOpKind::XOR;
            else if (op_name == "not") op = nfp::BoolOpKind::NOT;
            const std::vector<nfp::Piece> result =
                nfp::boolean_op(a.piece, b.piece, op, {epsilon_rel});
            nfp::BoundingBox bb = nfp::bounding_box(a.piece);
            bb.expand(nfp::bounding_box(b.piece));
            const double eps = nfp::ToleranceConfig{epsilon_rel}.absolute(bb.diagonal());
            write_output(out_path, nfp::serialize_pieces(op_name, result, eps));
            if (!svg_path.empty()) write_output(svg_path, nfp::render_svg(result));
        } else if (cmd_dec->parsed()) {
            const nfp::PieceDocument a = load_piece(path_a);
            const double eps =
                nfp::ToleranceConfig{epsilon_rel}.absolute(nfp::bounding_box(a.piece).diagonal());
            const nfp::ConvexDecomposition d = nfp::decompose(a.piece, eps);
            write_output(out_path, nfp::serialize_components(a.name, d.components, eps));
            if (!svg_path.empty()) {
                std::vector<nfp::Piece> pieces;
                for (const nfp::Contour& c : d.components) pieces.push_back({c, {}, c[0]});
                write_output(svg_path, nfp::render_svg(pieces));
            }
        } else if (cmd_val->parsed()) {
            const nfp::PieceDocument a = load_piece(path_a);
            const nfp::PieceDocument b = load_piece(path_b);
            const nfp::NfpConfig cfg{epsilon_rel};
            const nfp::NfpResult r = nfp::gen_nfp(a.piece, b.piece, cfg);
            const double eps = nfp::nfp_epsilon(a.piece, b.piece, cfg);
            const nfp::OracleReport rep = nfp::verify_nfp(a.piece, b.piece, r, grid_n, eps);
            std::cout << "samples " << rep.samples << " agreements " << rep.agreements
                      << " disagreements " << rep.disagreements.size() << "\n";
            for (const nfp::OracleDisagreement& d : rep.disagreements) {
                std::cerr << "disagreement at (" << d.placement.x << ", " << d.placement.y
                          << ") oracle_overlap=" << d.oracle_overlap
                          << " nfp_overlap=" << d.nfp_overlap << "\n";
            }
            if (!rep.ok()) return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
