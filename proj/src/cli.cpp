#include "hilbertimg/cli.hpp"

#include "hilbertimg/cgr.hpp"
#include "hilbertimg/config_file.hpp"
#include "hilbertimg/encoder.hpp"
#include "hilbertimg/errors.hpp"
#include "hilbertimg/fasta.hpp"
#include "hilbertimg/hilbert.hpp"
#include "hilbertimg/image_io.hpp"
#include "hilbertimg/labeled_csv.hpp"
#include "hilbertimg/manifest.hpp"
#include "hilbertimg/split.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <thread>
#include <vector>

namespace hilbertimg::cli {

namespace fs = std::filesystem;

namespace {

using Settings = std::map<std::string, std::string>;

const std::set<std::string> encoding_keys = {"order",  "alphabet", "mode",    "unknown",   "overflow",
                                             "normalization", "format", "encoder", "resolution"};
const std::set<std::string> dataset_keys = {"seed", "jobs", "seq-column", "label-column", "id-column",
                                            "stratify"};

/// String-valued options whose presence on the command line is tracked, so
/// they can be layered over config-file values.
class FlagSet {
public:
    void add(CLI::App* app, const std::string& key, const std::string& help) {
        options_[key] = app->add_option("--" + key, storage_[key], help);
    }

    Settings given() const {
        Settings out;
        for (const auto& [key, opt] : options_) {
            if (opt->count() > 0) {
                out[key] = storage_.at(key);
            }
        }
        return out;
    }

private:
    std::map<std::string, std::string> storage_;
    std::map<std::string, CLI::Option*> options_;
};

void add_encoding_flags(CLI::App* app, FlagSet& flags) {
    flags.add(app, "order", "curve order p; images are 2^p x 2^p (default 6)");
    flags.add(app, "alphabet", "protein20 | dna4 | custom:<symbols> (default protein20)");
    flags.add(app, "mode", "paper | positional (default paper)");
    flags.add(app, "unknown", "skip | error (default skip)");
    flags.add(app, "overflow", "modulo | clamp (default modulo)");
    flags.add(app, "normalization", "max_count | log_max (default max_count)");
    flags.add(app, "format", "pgm | png | csv (default pgm)");
    flags.add(app, "encoder", "hilbert | cgr (default hilbert)");
    flags.add(app, "resolution", "CGR grid side, a power of two (default 2^order)");
}

Settings merge(const std::string& config_path, const Settings& given, const std::set<std::string>& allowed) {
    Settings merged;
    if (!config_path.empty()) {
        merged = read_config_file(config_path);
        for (const auto& [key, value] : merged) {
            if (!allowed.contains(key)) {
                throw usage_error("unknown key '" + key + "' in config file " + config_path);
            }
        }
    }
    for (const auto& [key, value] : given) {
        merged[key] = value;
    }
    return merged;
}

std::string get(const Settings& s, const std::string& key, const std::string& fallback) {
    const auto it = s.find(key);
    return it == s.end() ? fallback : it->second;
}

std::uint64_t get_uint(const Settings& s, const std::string& key, std::uint64_t fallback, std::uint64_t lo,
                       std::uint64_t hi) {
    const auto it = s.find(key);
    if (it == s.end()) {
        return fallback;
    }
    std::uint64_t v = 0;
    const auto& text = it->second;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || v < lo || v > hi) {
        throw usage_error("--" + key + " must be an integer in [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "], got '" + text + "'");
    }
    return v;
}

bool get_bool(const Settings& s, const std::string& key, bool fallback) {
    const auto value = get(s, key, fallback ? "true" : "false");
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw usage_error("'" + key + "' must be true or false, got '" + value + "'");
}

struct ImageEncoder {
    std::function<EncodedImage(const SequenceRecord&)> encode;
    ImageFormat format = ImageFormat::pgm;
    std::string description;
};

ImageEncoder make_encoder(const Settings& s) {
    const auto order = static_cast<unsigned>(get_uint(s, "order", 6, 1, max_image_order));
    Alphabet alphabet = Alphabet::protein20();
    try {
        alphabet = Alphabet::from_name(get(s, "alphabet", "protein20"));
    } catch (const domain_error& e) {
        throw usage_error(e.what());
    }
    const auto unknown = parse_unknown_policy(get(s, "unknown", "skip"));
    const auto normalization = parse_normalization(get(s, "normalization", "max_count"));

    ImageEncoder enc;
    enc.format = parse_image_format(get(s, "format", "pgm"));
    const auto name = get(s, "encoder", "hilbert");
    if (name == "hilbert") {
        EncodingConfig config;
        config.params = CurveParams(order, 2);
        config.alphabet = alphabet;
        config.mode = parse_encoding_mode(get(s, "mode", "paper"));
        config.unknown_policy = unknown;
        config.overflow_policy = parse_overflow_policy(get(s, "overflow", "modulo"));
        config.normalization = normalization;
        enc.description = config.describe();
        enc.encode = [config](const SequenceRecord& r) { return encode_sequence(r, config); };
    } else if (name == "cgr") {
        CgrConfig config;
        config.resolution = get_uint(s, "resolution", std::uint64_t{1} << order, 2, std::uint64_t{1} << max_image_order);
        if ((config.resolution & (config.resolution - 1)) != 0) {
            throw usage_error("--resolution must be a power of two, got " + std::to_string(config.resolution));
        }
        config.unknown_policy = unknown;
        config.normalization = normalization;
        enc.description = "cgr;resolution=" + std::to_string(config.resolution) + ";alphabet=" + alphabet.describe();
        enc.encode = [config, alphabet](const SequenceRecord& r) { return encode_cgr(r, config, alphabet); };
    } else {
        throw usage_error("invalid encoder '" + name + "' (expected one of: hilbert, cgr)");
    }
    return enc;
}

/// File-name-safe form of a record id.
std::string file_stem(const std::string& id) {
    std::string out;
    for (char c : id) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '.' ||
                        c == '-' || c == '_';
        out.push_back(ok ? c : '_');
    }
    if (out.empty() || out == "." || out == "..") {
        out = "_" + out;
    }
    return out;
}

std::vector<std::string> image_names(const std::vector<SequenceRecord>& records, ImageFormat format) {
    std::vector<std::string> names;
    std::set<std::string> used;
    for (const auto& r : records) {
        auto name = file_stem(r.id) + "." + std::string(to_string(format));
        if (!used.insert(name).second) {
            throw io_error("record ids map to the same file name '" + name + "'");
        }
        names.push_back(std::move(name));
    }
    return names;
}

/// Runs fn(i) for i in [0, n) on up to `jobs` threads. fn must not throw.
template <typename Fn>
void parallel_for(std::size_t n, std::size_t jobs, Fn fn) {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) {
            fn(i);
        }
    };
    std::vector<std::jthread> pool;
    for (std::size_t k = 1; k < std::min(jobs, n); ++k) {
        pool.emplace_back(worker);
    }
    worker();
}

int cmd_curve(unsigned order, unsigned dims, const std::string& out_path, std::ostream& out) {
    if (order < 1 || order > max_table_order) {
        throw usage_error("--order must be in [1, " + std::to_string(max_table_order) + "], got " +
                          std::to_string(order));
    }
    if (dims != 2) {
        throw usage_error("only --dims 2 is supported");
    }
    std::ofstream file;
    std::ostream* sink = &out;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            throw io_error("cannot write " + out_path);
        }
        sink = &file;
    }
    const CurveParams params(order, dims);
    std::string buffer;
    for (std::uint64_t d = 0; d < params.theta(); ++d) {
        const auto pt = point_from_distance(CurveDistance{d}, params);
        buffer += std::to_string(d) + '\t' + std::to_string(pt.coords[0]) + '\t' + std::to_string(pt.coords[1]) + '\n';
    }
    *sink << buffer;
    sink->flush();
    if (!*sink) {
        throw io_error("failed writing curve table");
    }
    return exit_ok;
}

int cmd_encode(const std::string& input, const std::string& out_dir, const Settings& settings, std::ostream& out,
               std::ostream& err) {
    const auto encoder = make_encoder(settings);
    std::ifstream in(input, std::ios::binary);
    if (!in) {
        throw io_error("cannot open input " + input);
    }
    const auto records = parse_fasta_or_plain(in);
    if (records.empty()) {
        throw parse_error("no sequences in " + input, 0);
    }
    const auto names = image_names(records, encoder.format);

    std::size_t mapped = 0;
    std::size_t skipped = 0;
    std::size_t side = 0;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto img = encoder.encode(records[i]);
        write_image(img, fs::path(out_dir) / names[i], encoder.format);
        mapped += img.meta.mapped;
        skipped += img.meta.skipped;
        side = img.side();
    }
    if (skipped > 0) {
        err << "warning: skipped " << skipped << " symbol(s) not in the alphabet\n";
    }
    out << "encoded " << records.size() << " record(s) into " << out_dir << ": " << side << "x" << side
        << " mapped=" << mapped << " skipped=" << skipped << '\n';
    return exit_ok;
}

int cmd_dataset(const std::string& csv, const std::string& out_dir, const Settings& settings, std::ostream& out,
                std::ostream& err) {
    const auto encoder = make_encoder(settings);
    CsvColumns columns;
    columns.sequence = get(settings, "seq-column", columns.sequence);
    columns.label = get(settings, "label-column", columns.label);
    if (settings.contains("id-column")) {
        columns.id = settings.at("id-column");
    }
    SplitConfig split_config;
    split_config.seed = get_uint(settings, "seed", 42, 0, UINT64_MAX);
    split_config.stratify = get_bool(settings, "stratify", true);
    const auto hw = std::max(1u, std::thread::hardware_concurrency());
    const auto jobs = static_cast<std::size_t>(get_uint(settings, "jobs", hw, 1, 1024));

    std::ifstream in(csv, std::ios::binary);
    if (!in) {
        throw io_error("cannot open input " + csv);
    }
    const auto dataset = parse_labeled_csv(in, columns);
    const auto& records = dataset.records;
    auto split = split_dataset(records, split_config);
    for (const auto& w : split.warnings) {
        err << "warning: " << w << '\n';
    }
    const auto names = image_names(records, encoder.format);

    const fs::path root(out_dir);
    const fs::path manifest_path = root / "manifest.tsv";
    std::error_code ec;
    fs::remove(manifest_path, ec);

    std::vector<std::string> failures(records.size());
    parallel_for(records.size(), jobs, [&](std::size_t i) {
        try {
            const auto img = encoder.encode(records[i]);
            write_image(img, root / "images" / names[i], encoder.format);
        } catch (const std::exception& e) {
            failures[i] = e.what();
        }
    });
    std::size_t failed = 0;
    for (const auto& f : failures) {
        if (!f.empty()) {
            err << "error: " << f << '\n';
            ++failed;
        }
    }
    if (failed > 0) {
        err << "error: " << failed << " of " << records.size() << " record(s) failed; manifest not written\n";
        return exit_runtime;
    }

    for (std::size_t i = 0; i < records.size(); ++i) {
        split.manifest.rows[i].image_path = "images/" + names[i];
    }
    write_manifest(split.manifest, manifest_path);

    std::map<std::string, std::size_t> histogram;
    for (const auto& r : records) {
        ++histogram[r.label.value_or("")];
    }
    out << "records: " << records.size() << " (blank rows skipped: " << dataset.skipped_rows << ")\n";
    out << "classes:\n";
    for (const auto& [label, count] : histogram) {
        out << "  " << (label.empty() ? "<unlabeled>" : label) << '\t' << count << '\n';
    }
    out << "split: train=" << split.manifest.count(Split::train) << " val=" << split.manifest.count(Split::val)
        << " test=" << split.manifest.count(Split::test) << (split.stratified ? " (stratified)" : " (unstratified)")
        << " seed=" << split_config.seed << '\n';
    out << "encoder: " << encoder.description << '\n';
    out << "wrote " << records.size() << " image(s) and " << manifest_path.string() << '\n';
    return exit_ok;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hilbert-curve image encodings of molecular sequences", "hilbertimg"};
    app.require_subcommand(1);

    auto* curve = app.add_subcommand("curve", "print the curve as 'd<TAB>x<TAB>y' rows");
    unsigned curve_order = 0;
    unsigned curve_dims = 2;
    std::string curve_out;
    curve->add_option("--order", curve_order, "curve order p")->required();
    curve->add_option("--dims", curve_dims, "number of dimensions (only 2 is supported)");
    curve->add_option("--out", curve_out, "write to a file instead of stdout");

    auto* encode = app.add_subcommand("encode", "encode each record of a FASTA or plain file as an image");
    std::string encode_input;
    std::string encode_out = ".";
    std::string encode_config;
    FlagSet encode_flags;
    encode->add_option("input", encode_input, "FASTA file, or one sequence per line")->required();
    encode->add_option("--out", encode_out, "output directory (default .)");
    encode->add_option("--config", encode_config, "key = value settings file");
    add_encoding_flags(encode, encode_flags);

    auto* dataset = app.add_subcommand("dataset", "encode a labeled CSV and write a split manifest");
    std::string dataset_csv;
    std::string dataset_out;
    std::string dataset_config;
    bool no_stratify = false;
    FlagSet dataset_flags;
    dataset->add_option("csv", dataset_csv, "labeled CSV input")->required();
    dataset->add_option("--out", dataset_out, "output directory")->required();
    dataset->add_option("--config", dataset_config, "key = value settings file");
    dataset->add_flag("--no-stratify", no_stratify, "split without stratifying by label");
    add_encoding_flags(dataset, dataset_flags);
    dataset_flags.add(dataset, "seq-column", "sequence column name (default sequence)");
    dataset_flags.add(dataset, "label-column", "label column name (default class)");
    dataset_flags.add(dataset, "id-column", "id column name (default: 'id' if present, else row number)");
    dataset_flags.add(dataset, "seed", "split seed (default 42)");
    dataset_flags.add(dataset, "jobs", "worker threads (default: hardware concurrency)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (curve->parsed()) {
            return cmd_curve(curve_order, curve_dims, curve_out, out);
        }
        if (encode->parsed()) {
            const auto settings = merge(encode_config, encode_flags.given(), encoding_keys);
            return cmd_encode(encode_input, encode_out, settings, out, err);
        }
        auto allowed = encoding_keys;
        allowed.insert(dataset_keys.begin(), dataset_keys.end());
        auto given = dataset_flags.given();
        if (no_stratify) {
            given["stratify"] = "false";
        }
        const auto settings = merge(dataset_config, given, allowed);
        return cmd_dataset(dataset_csv, dataset_out, settings, out, err);
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const schema_error& e) {
        err << "schema error: " << e.what() << '\n';
        return exit_usage;
    } catch (const sizing_error& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_runtime;
    }
}

}  // namespace hilbertimg::cli
