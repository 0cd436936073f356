// Command-line front end for the excseq shared library. All computation
// happens behind the C API; this binary only assembles JSON requests from
// flags and files and writes the report.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "excseq.h"

namespace {

using nlohmann::json;

// Flag values are either inline JSON or a path to a JSON file.
json load_json_arg(const std::string& arg) {
    std::string text = arg;
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw std::runtime_error("empty JSON argument");
    if (text[first] != '{' && text[first] != '[') {
        std::ifstream in(arg);
        if (!in) throw std::runtime_error("cannot open file: " + arg);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    return json::parse(text);
}

int emit(const std::string& request, const std::string& output_path) {
    char* out = nullptr;
    excseq_status st = excseq_run_json(request.c_str(), &out);
    if (out) {
        if (output_path.empty()) {
            std::fputs(out, stdout);
        } else {
            std::ofstream f(output_path, std::ios::binary);
            if (!f) {
                std::fprintf(stderr, "error: cannot write %s\n", output_path.c_str());
                excseq_string_free(out);
                return 1;
            }
            f << out;
        }
        excseq_string_free(out);
    }
    if (st != EXCSEQ_OK) {
        const char* msg = excseq_last_error();
        if (msg && *msg) std::fprintf(stderr, "error: %s\n", msg);
        return st == EXCSEQ_ERR_VIOLATION ? 2 : 1;
    }
    return 0;
}

json diagram_request(const std::string& quiver_arg, const std::string& modules_arg) {
    json req;
    req["quiver"] = load_json_arg(quiver_arg);
    json mods = load_json_arg(modules_arg);
    if (mods.is_object() && mods.contains("modules")) mods = mods["modules"];
    if (mods.is_object() && mods.contains("arcs")) {
        req["arcs"] = mods["arcs"];
    } else {
        req["modules"] = mods;
    }
    return req;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exceptional-collection calculus on affine type A quivers"};
    app.set_version_flag("--version", excseq_version());
    long long seed = 0;
    app.add_option("--seed", seed,
                   "seed for randomized property harnesses (unused by these commands)");

    std::string quiver, modules, from, to, module_arg, direction = "cw", output;
    long long lambda_max = 0;
    bool inverse = false;
    int size = 520;
    bool no_labels = false;

    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("-o,--output", output, "write the report to a file instead of stdout");
    };

    auto* check = app.add_subcommand("check", "validate an exceptional collection and order it");
    check->add_option("--quiver", quiver, "quiver JSON or file")->required();
    check->add_option("--modules", modules, "module list JSON or file")->required();
    add_output(check);

    auto* order = app.add_subcommand("order", "produce an exceptional sequence ordering");
    order->add_option("--quiver", quiver)->required();
    order->add_option("--modules", modules)->required();
    add_output(order);

    auto* hom = app.add_subcommand("hom", "dimension of Hom(from, to)");
    hom->add_option("--quiver", quiver)->required();
    hom->add_option("--from", from)->required();
    hom->add_option("--to", to)->required();
    add_output(hom);

    auto* ext = app.add_subcommand("ext", "dimension of Ext^1(from, to)");
    ext->add_option("--quiver", quiver)->required();
    ext->add_option("--from", from)->required();
    ext->add_option("--to", to)->required();
    add_output(ext);

    auto* tau = app.add_subcommand("tau", "AR translate of a module");
    tau->add_option("--quiver", quiver)->required();
    tau->add_option("--module", module_arg)->required();
    tau->add_flag("--inverse", inverse, "apply the inverse translate");
    add_output(tau);

    auto* twist = app.add_subcommand("twist", "2pi Dehn twist of a diagram");
    twist->add_option("--quiver", quiver)->required();
    twist->add_option("--modules", modules)->required();
    twist->add_option("--direction", direction, "cw or ccw");
    add_output(twist);

    auto* families = app.add_subcommand("families", "count and list parametrized families");
    families->add_option("--quiver", quiver)->required();
    add_output(families);

    auto* enumerate = app.add_subcommand("enumerate", "exceptional diagrams up to a winding bound");
    enumerate->add_option("--quiver", quiver)->required();
    enumerate->add_option("--lambda-max", lambda_max, "winding bound (default 0)");
    add_output(enumerate);

    auto* render = app.add_subcommand("render", "draw a diagram as SVG");
    render->add_option("--quiver", quiver)->required();
    render->add_option("--modules", modules)->required();
    render->add_option("--size", size, "canvas edge in pixels");
    render->add_flag("--no-labels", no_labels, "omit vertex labels");
    add_output(render);

    app.require_subcommand(1);
    CLI11_PARSE(app, argc, argv);

    try {
        json req;
        if (*check || *order || *twist || *render) {
            req = diagram_request(quiver, modules);
            if (*check) req["command"] = "check";
            if (*order) req["command"] = "order";
            if (*twist) {
                req["command"] = "twist";
                req["direction"] = direction;
            }
            if (*render) {
                req["command"] = "render";
                req["size"] = size;
                req["labels"] = !no_labels;
            }
        } else if (*hom || *ext) {
            req["command"] = *hom ? "hom" : "ext";
            req["quiver"] = load_json_arg(quiver);
            req["from"] = load_json_arg(from);
            req["to"] = load_json_arg(to);
        } else if (*tau) {
            req["command"] = "tau";
            req["quiver"] = load_json_arg(quiver);
            req["module"] = load_json_arg(module_arg);
            req["inverse"] = inverse;
        } else if (*families) {
            req["command"] = "families";
            req["quiver"] = load_json_arg(quiver);
        } else if (*enumerate) {
            req["command"] = "enumerate";
            req["quiver"] = load_json_arg(quiver);
            req["lambda_max"] = lambda_max;
        }
        return emit(req.dump(), output);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
