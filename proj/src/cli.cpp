#include "sfc/cli.hpp"

#include "sfc/cache_sim.hpp"
#include "sfc/curve.hpp"
#include "sfc/kernels.hpp"
#include "sfc/nonsquare.hpp"

#include <CLI11.hpp>

#include <bit>
#include <fstream>
#include <iostream>
#include <sstream>

namespace sfc {

namespace {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint32_t coordinate(std::int64_t v, const char* name) {
    if (v < 0) {
        throw std::invalid_argument(std::string(name) + " must be non-negative");
    }
    if (v > static_cast<std::int64_t>(max_coordinate)) {
        throw std::overflow_error(std::string(name) + " exceeds 31 bits");
    }
    return static_cast<std::uint32_t>(v);
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

std::vector<double> parse_fractions(const std::string& text) {
    std::vector<double> out;
    for (const auto& item : split_list(text)) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size()) {
            throw usage_error("bad fraction '" + item + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw usage_error("no fractions given");
    }
    return out;
}

struct encode_options {
    std::string curve = "hilbert";
    std::int64_t i = 0;
    std::int64_t j = 0;
    std::int64_t n = 0;
    bool transpose = false;
};

struct decode_options {
    std::string curve = "hilbert";
    std::string h;
    std::int64_t n = 0;
    bool transpose = false;
};

struct generate_options {
    std::uint32_t n = 1;
    std::uint32_t m = 0;
    std::string shape = "rect";
    std::string format = "csv";
    bool tile = false;
};

struct bench_options {
    std::string kernel;
    std::uint32_t n = 64;
    std::string orders = "nested,hilbert";
    std::string fractions = "0.05,0.1,0.15,0.2";
    std::uint64_t block_size = 8;
    bool parallel = false;
};

struct trace_options {
    std::string kernel;
    std::uint32_t n = 8;
    std::string order = "nested";
};

struct simulate_options {
    std::string file = "-";
    std::string fractions = "1.0";
    std::uint64_t block_size = 8;
};

void cmd_encode(const encode_options& o, std::ostream& out) {
    auto p = coord_pair{coordinate(o.i, "i"), coordinate(o.j, "j")};
    if (o.transpose) {
        p = {p.j, p.i};
    }
    order_value h = 0;
    if (o.curve == "hilbert") {
        h = hilbert_encode(p);
    } else if (o.curve == "z") {
        h = z_encode(p);
    } else {
        if (o.n <= 0) {
            throw usage_error("canonic order needs --n >= 1");
        }
        h = canonic_order(p, static_cast<std::uint64_t>(o.n));
    }
    out << h << '\n';
}

void cmd_decode(const decode_options& o, std::ostream& out) {
    std::size_t used = 0;
    order_value h = 0;
    if (!o.h.empty() && o.h.front() == '-') {
        throw std::invalid_argument("h must be non-negative");
    }
    try {
        h = std::stoull(o.h, &used, 10);
    } catch (const std::out_of_range&) {
        throw std::overflow_error("h exceeds 64 bits");
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != o.h.size()) {
        throw usage_error("--h expects a decimal order value");
    }
    coord_pair p;
    if (o.curve == "hilbert") {
        p = hilbert_decode(h);
    } else if (o.curve == "z") {
        p = z_decode(h);
    } else {
        if (o.n <= 0) {
            throw usage_error("canonic order needs --n >= 1");
        }
        const auto n = static_cast<std::uint64_t>(o.n);
        if (h / n > max_coordinate || n - 1 > max_coordinate) {
            throw std::overflow_error("decoded row exceeds 31 bits");
        }
        p = {static_cast<std::uint32_t>(h / n), static_cast<std::uint32_t>(h % n)};
    }
    if (o.transpose) {
        p = {p.j, p.i};
    }
    out << p.i << ',' << p.j << '\n';
}

class visit_writer {
public:
    visit_writer(std::ostream& out, const std::string& format, std::uint32_t n, std::uint32_t m)
        : out_(out), svg_(format == "svg") {
        if (svg_) {
            out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << m * 10
                 << "\" height=\"" << n * 10 << "\" viewBox=\"0 0 " << m * 10 << ' ' << n * 10
                 << "\">\n<polyline fill=\"none\" stroke=\"black\" points=\"";
        } else {
            out_ << "h,i,j\n";
        }
    }

    void operator()(std::uint32_t i, std::uint32_t j, order_value h) {
        if (svg_) {
            out_ << (first_ ? "" : " ") << j * 10 + 5 << ',' << i * 10 + 5;
            first_ = false;
        } else {
            out_ << h << ',' << i << ',' << j << '\n';
        }
    }

    void finish() {
        if (svg_) {
            out_ << "\"/>\n</svg>\n";
        }
    }

private:
    std::ostream& out_;
    bool svg_;
    bool first_ = true;
};

void cmd_generate(const generate_options& o, std::ostream& out) {
    const auto m = o.m == 0 ? o.n : o.m;
    if (o.shape == "tri") {
        if (o.n != m || !std::has_single_bit(o.n)) {
            throw usage_error("--shape tri needs n = m = a power of two");
        }
        std::ostringstream buf;
        visit_writer w(buf, o.format, o.n, m);
        iter_fgf(static_cast<unsigned>(std::countr_zero(o.n)), triangle_query, w);
        w.finish();
        out << buf.str();
        return;
    }
    // Plan first so an aspect ratio error leaves stdout empty.
    std::vector<fur_plan> plans;
    std::vector<fur_strip> strips;
    if (o.tile) {
        strips = tile_strips(o.n, m);
    } else {
        strips = {{0, 0, o.n, m}};
    }
    for (const auto& s : strips) {
        plans.emplace_back(s.rows, s.cols);
    }
    visit_writer w(out, o.format, o.n, m);
    order_value h = 0;
    for (std::size_t s = 0; s < plans.size(); ++s) {
        plans[s].for_each([&](std::uint32_t i, std::uint32_t j) {
            w(strips[s].i0 + i, strips[s].j0 + j, h++);
        });
    }
    w.finish();
}

std::vector<traversal_order> parse_orders(const std::string& text) {
    std::vector<traversal_order> out;
    for (const auto& item : split_list(text)) {
        try {
            out.push_back(traversal_order::parse(item));
        } catch (const std::invalid_argument& e) {
            throw usage_error(e.what());
        }
    }
    if (out.empty()) {
        throw usage_error("no traversal orders given");
    }
    return out;
}

access_trace kernel_trace(const std::string& kernel, std::uint32_t n, traversal_order order) {
    if (kernel == "matmul") {
        return matmul_trace(n, n, n, order);
    }
    return floyd_trace(n, order);
}

void cmd_bench(const bench_options& o, std::ostream& out) {
    if (o.n < 2) {
        throw usage_error("bench needs --n >= 2");
    }
    const auto orders = parse_orders(o.orders);
    const auto fractions = parse_fractions(o.fractions);
    std::ostringstream buf;
    buf << "order,fraction,misses,accesses\n";
    for (const auto& order : orders) {
        const auto trace = kernel_trace(o.kernel, o.n, order);
        const auto report = o.parallel ? sweep_parallel(o.block_size, trace, fractions)
                                       : sweep(o.block_size, trace, fractions);
        for (const auto& p : report.points) {
            buf << order.name() << ',' << p.fraction << ',' << p.misses << ',' << p.accesses
                << '\n';
        }
    }
    out << buf.str();
}

void cmd_trace(const trace_options& o, std::ostream& out) {
    if (o.n < 1) {
        throw usage_error("trace needs --n >= 1");
    }
    traversal_order order;
    try {
        order = traversal_order::parse(o.order);
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }
    write_trace(out, kernel_trace(o.kernel, o.n, order));
}

void cmd_simulate(const simulate_options& o, std::ostream& out) {
    const auto fractions = parse_fractions(o.fractions);
    access_trace trace;
    if (o.file == "-") {
        trace = read_trace(std::cin);
    } else {
        std::ifstream in(o.file);
        if (!in) {
            throw std::runtime_error("cannot open trace file " + o.file);
        }
        trace = read_trace(in);
    }
    std::ostringstream buf;
    write_report_csv(buf, sweep(o.block_size, trace, fractions));
    out << buf.str();
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Space-filling curve loops, conversions and cache-miss benchmarks", "sfc"};
    app.require_subcommand(1);

    const std::vector<std::string> curves{"hilbert", "z", "canonic"};

    encode_options enc;
    auto* encode = app.add_subcommand("encode", "Print the order value of (i, j)");
    encode->add_option("--curve", enc.curve)->check(CLI::IsMember(curves));
    encode->add_option("--i", enc.i, "Row index")->required();
    encode->add_option("--j", enc.j, "Column index")->required();
    encode->add_option("--n", enc.n, "Row length (canonic order)");
    encode->add_flag("--transpose", enc.transpose, "Encode (j, i) instead");

    decode_options dec;
    auto* decode = app.add_subcommand("decode", "Print i,j for an order value");
    // --h is the order value, so help is long-form only here.
    decode->set_help_flag("--help", "Print this help message and exit");
    decode->add_option("--curve", dec.curve)->check(CLI::IsMember(curves));
    decode->add_option("--h", dec.h, "Order value")->required();
    decode->add_option("--n", dec.n, "Row length (canonic order)");
    decode->add_flag("--transpose", dec.transpose, "Decode with indices exchanged");

    generate_options gen;
    auto* generate = app.add_subcommand("generate", "Emit a Hilbert loop as CSV (h,i,j) or SVG");
    generate->add_option("--n", gen.n, "Rows")->required()->check(CLI::PositiveNumber);
    generate->add_option("--m", gen.m, "Columns (default: n)")->check(CLI::PositiveNumber);
    generate->add_option("--shape", gen.shape)->check(CLI::IsMember({"rect", "tri"}));
    generate->add_option("--format", gen.format)->check(CLI::IsMember({"csv", "svg"}));
    generate->add_flag("--tile", gen.tile,
                       "Split extreme aspect ratios into independent strips");

    bench_options ben;
    auto* bench = app.add_subcommand("bench", "Cache misses of kernel traces over capacities");
    bench->add_option("kernel", ben.kernel)->required()->check(CLI::IsMember({"matmul", "floyd"}));
    bench->add_option("--n", ben.n, "Problem size");
    bench->add_option("--orders", ben.orders, "nested, hilbert, blocked[:s]");
    bench->add_option("--fractions", ben.fractions, "Cache capacities as footprint fractions");
    bench->add_option("--block-size", ben.block_size, "Addresses per cache block");
    bench->add_flag("--parallel", ben.parallel, "Simulate the fractions concurrently");

    trace_options tra;
    auto* trace = app.add_subcommand("trace", "Print a kernel's address trace");
    trace->add_option("kernel", tra.kernel)->required()->check(CLI::IsMember({"matmul", "floyd"}));
    trace->add_option("--n", tra.n, "Problem size");
    trace->add_option("--order", tra.order, "nested, hilbert, blocked[:s]");

    simulate_options sim;
    auto* simulate_cmd = app.add_subcommand("simulate", "LRU misses of a trace file");
    simulate_cmd->add_option("--trace", sim.file, "Trace file, '-' for stdin");
    simulate_cmd->add_option("--fractions", sim.fractions);
    simulate_cmd->add_option("--block-size", sim.block_size);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage_error;
    }

    try {
        if (encode->parsed()) {
            cmd_encode(enc, out);
        } else if (decode->parsed()) {
            cmd_decode(dec, out);
        } else if (generate->parsed()) {
            cmd_generate(gen, out);
        } else if (bench->parsed()) {
            cmd_bench(ben, out);
        } else if (trace->parsed()) {
            cmd_trace(tra, out);
        } else if (simulate_cmd->parsed()) {
            cmd_simulate(sim, out);
        }
    } catch (const usage_error& e) {
        err << "sfc: " << e.what() << '\n';
        return exit_usage_error;
    } catch (const aspect_ratio_error& e) {
        err << "sfc: " << e.what() << "; or pass --tile\n";
        return exit_domain_error;
    } catch (const std::exception& e) {
        err << "sfc: " << e.what() << '\n';
        return exit_domain_error;
    }
    return exit_ok;
}

} // namespace sfc
