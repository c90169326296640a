#pragma once

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "apwenian/approx.hpp"
#include "apwenian/classify.hpp"
#include "apwenian/criteria.hpp"
#include "apwenian/errors.hpp"
#include "apwenian/hankel.hpp"
#include "apwenian/jfraction.hpp"
#include "apwenian/sequences.hpp"
#include "apwenian/words.hpp"

namespace apw::cli {

using json = nlohmann::ordered_json;

namespace detail {

inline std::string read_sequence_line(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("expected a sequence on standard input");
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
        line.pop_back();
    if (line.empty()) throw std::invalid_argument("empty input line");
    return line;
}

inline std::vector<Int> parse_int_sequence(const std::string& line) {
    std::vector<Int> a;
    std::string token;
    for (char ch : line) {
        if (ch == ',' || ch == ' ' || ch == '\t') {
            if (!token.empty()) a.emplace_back(token);
            token.clear();
        } else {
            token += ch;
        }
    }
    if (!token.empty()) a.emplace_back(token);
    if (a.empty()) throw std::invalid_argument("expected a comma- or space-separated integer sequence");
    return a;
}

inline std::vector<unsigned> parse_directives(const std::string& s) {
    std::vector<unsigned> dirs;
    std::string token;
    for (char ch : s) {
        if (ch == ',') {
            dirs.push_back(static_cast<unsigned>(std::stoul(token)));
            token.clear();
        } else {
            token += ch;
        }
    }
    if (!token.empty()) dirs.push_back(static_cast<unsigned>(std::stoul(token)));
    return dirs;
}

inline std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    return buf;
}

inline std::string rat_string(const Rat& x) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(x) << '/' << boost::multiprecision::denominator(x);
    return os.str();
}

inline json int_to_json(const Int& v) {
    if (v >= 0 && v <= Int(std::numeric_limits<std::uint64_t>::max()))
        return json(v.convert_to<std::uint64_t>());
    if (v < 0 && -v <= Int(std::numeric_limits<std::int64_t>::max()))
        return json(v.convert_to<std::int64_t>());
    return json(v.str());
}

inline std::string hash_hex(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.resize(width, ' ');
    return s;
}

inline NamedSequence named_from_string(const std::string& s) {
    if (s == "thue-morse-pm") return NamedSequence::thue_morse_pm;
    if (s == "thue-morse-01") return NamedSequence::thue_morse_01;
    if (s == "period-doubling") return NamedSequence::period_doubling;
    if (s == "thue-morse-doubled") return NamedSequence::thue_morse_doubled;
    if (s == "zero-parity-pm") return NamedSequence::zero_parity_pm;
    throw std::invalid_argument("unknown sequence name: " + s);
}

inline ScanFamily family_from_string(const std::string& s) {
    if (s == "type1_01") return ScanFamily::type1_01;
    if (s == "type2_pm") return ScanFamily::type2_pm;
    if (s == "general_pm") return ScanFamily::general_pm;
    throw std::invalid_argument("unknown scan family: " + s);
}

}  // namespace detail

// Runs one CLI invocation. Output is byte-identical for identical
// arguments and input regardless of thread count. Exit codes: 0 success
// or PASS, 1 criterion FAIL, 2 usage or data error, 3 breach of an
// internal invariant.
inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out_stream,
               std::ostream& err_stream) {
    CLI::App app{"apwenian sequence toolkit"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    std::string out_file;
    app.add_option("--out", out_file, "write output to FILE instead of stdout");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a sequence prefix");
    std::string gen_name, gen_alphabet, gen_image1, gen_image0, gen_sturmian;
    std::size_t gen_len = 0;
    gen->add_option("--name", gen_name,
                    "named family: thue-morse-pm, thue-morse-01, period-doubling, "
                    "thue-morse-doubled, zero-parity-pm");
    gen->add_option("--alphabet", gen_alphabet, "substitution alphabet")
        ->check(CLI::IsMember({"01", "pm"}));
    gen->add_option("--image1", gen_image1, "image of the letter 1 (or +)");
    gen->add_option("--image0", gen_image0, "image of the letter 0 (or -)");
    gen->add_option("--sturmian", gen_sturmian, "characteristic word directives a1,a2,...");
    gen->add_option("--len", gen_len, "prefix length")->required();

    // check
    auto* check = app.add_subcommand("check", "run the apwenian criterion on a sequence line");
    std::string check_alphabet;
    check->add_option("--alphabet", check_alphabet, "input alphabet")
        ->check(CLI::IsMember({"01", "pm"}))
        ->required();

    // hankel
    auto* hankel_cmd = app.add_subcommand("hankel", "Hankel determinants of a sequence line");
    std::string hankel_mode;
    std::size_t hankel_n = 0, hankel_nmax = 0;
    bool hankel_oracle = false;
    hankel_cmd->add_option("--mode", hankel_mode, "gf2, exact or pm-profile")
        ->check(CLI::IsMember({"gf2", "exact", "pm-profile"}))
        ->required();
    hankel_cmd->add_option("--n", hankel_n, "determinant order");
    hankel_cmd->add_option("--nmax", hankel_nmax, "largest profile order");
    hankel_cmd->add_flag("--oracle", hankel_oracle, "force the exact-oracle profile path");

    // jfrac
    auto* jfrac = app.add_subcommand("jfrac", "J-fraction expansion of a sequence line");
    std::size_t jfrac_depth = 0, jfrac_approximant = 0, jfrac_terms = 0;
    bool jfrac_rational = false;
    jfrac->add_option("--depth", jfrac_depth, "number of u coefficients")->required();
    jfrac->add_option("--approximant", jfrac_approximant, "also evaluate the n-th approximant");
    jfrac->add_option("--terms", jfrac_terms, "approximant truncation (default 2n+2)");
    jfrac->add_flag("--rational", jfrac_rational, "exact-rational expansion of an integer sequence");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "classification report for odd p");
    std::uint64_t classify_p = 0;
    bool classify_enum = false;
    classify_cmd->add_option("--p", classify_p, "odd substitution length")->required();
    classify_cmd->add_flag("--enumerate", classify_enum, "list the apwenian coefficient vectors");

    // count
    auto* count = app.add_subcommand("count", "table of N_p for p = 2..pmax");
    std::uint64_t count_pmax = 0;
    count->add_option("--pmax", count_pmax, "largest length")->required();

    // scan
    auto* scan = app.add_subcommand("scan", "brute-force substitution scan");
    std::string scan_family_str;
    std::size_t scan_p = 0, scan_depth = 0;
    unsigned scan_threads = 0;
    scan->add_option("--family", scan_family_str, "type1_01, type2_pm or general_pm")->required();
    scan->add_option("--p", scan_p, "substitution length")->required();
    scan->add_option("--depth", scan_depth, "screening prefix length")->required();
    scan->add_option("--threads", scan_threads, "worker threads (default APW_THREADS or 1)");

    // pade
    auto* pade_cmd = app.add_subcommand("pade", "[n-1/n] Pade approximant of an integer sequence line");
    std::size_t pade_n = 0;
    pade_cmd->add_option("--n", pade_n, "approximant order")->required();

    // approx
    auto* approx_cmd = app.add_subcommand("approx", "rational approximations of the product value");
    std::size_t approx_p = 0, approx_nmax = 8;
    std::uint64_t approx_b = 0;
    std::string approx_v;
    approx_cmd->add_option("--p", approx_p, "substitution length")->required();
    approx_cmd->add_option("--v", approx_v, "coefficient vector over '+','-'")->required();
    approx_cmd->add_option("--b", approx_b, "evaluation base, z = 1/b")->required();
    approx_cmd->add_option("--nmax", approx_nmax, "largest approximant order");

    for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out_stream, err_stream);
        if (code == 0) return 0;  // --help and friends
        err_stream << app.help();
        return 2;
    }

    std::ofstream file_out;
    std::ostream* outp = &out_stream;
    if (!out_file.empty()) {
        file_out.open(out_file);
        if (!file_out) {
            err_stream << "error: cannot open output file " << out_file << "\n";
            return 2;
        }
        outp = &file_out;
    }
    std::ostream& out = *outp;
    const bool json_mode = (format == "json");

    try {
        if (app.got_subcommand(gen)) {
            std::string seq;
            if (!gen_name.empty()) {
                const NamedSequence name = detail::named_from_string(gen_name);
                if (name == NamedSequence::thue_morse_01 || name == NamedSequence::period_doubling)
                    seq = named_sequence_bits(name, gen_len).to_string();
                else
                    seq = named_sequence_signs(name, gen_len).to_string();
            } else if (!gen_sturmian.empty()) {
                seq = sturmian_characteristic(SturmianSpec(detail::parse_directives(gen_sturmian)),
                                              gen_len)
                          .to_string();
            } else if (!gen_image1.empty() && !gen_image0.empty() && !gen_alphabet.empty()) {
                const Alphabet a = (gen_alphabet == "01") ? Alphabet::zero_one : Alphabet::plus_minus;
                const Substitution sub = Substitution::parse(a, gen_image1, gen_image0);
                seq = (a == Alphabet::zero_one) ? fixed_point_bits(sub, gen_len).to_string()
                                                : fixed_point_signs(sub, gen_len).to_string();
            } else {
                throw std::invalid_argument(
                    "gen needs --name, --sturmian, or --alphabet with --image1/--image0");
            }
            out << seq << "\n";
            return 0;
        }

        if (app.got_subcommand(check)) {
            const std::string line = detail::read_sequence_line(in);
            CriterionReport rep;
            if (check_alphabet == "01")
                rep = check_01(BitSeq::from_string(line));
            else
                rep = check_pm(SignSeq::from_string(line));
            if (json_mode) {
                json j{{"checked_up_to", rep.checked_up_to}};
                j["violation"] = rep.violation ? json(*rep.violation) : json(nullptr);
                out << j.dump() << "\n";
            } else if (rep.passed()) {
                out << "PASS up-to-" << rep.checked_up_to << "\n";
            } else {
                out << "FAIL at n=" << *rep.violation << "\n";
            }
            return rep.passed() ? 0 : 1;
        }

        if (app.got_subcommand(hankel_cmd)) {
            const std::string line = detail::read_sequence_line(in);
            if (hankel_mode == "gf2") {
                if (hankel_n == 0) throw std::invalid_argument("--n is required for mode gf2");
                out << hankel_gf2(BitSeq::from_string(line), hankel_n) << "\n";
            } else if (hankel_mode == "exact") {
                if (hankel_n == 0) throw std::invalid_argument("--n is required for mode exact");
                const Int h = (line.find_first_of("+-") != std::string::npos)
                                  ? hankel_exact(SignSeq::from_string(line), hankel_n)
                                  : hankel_exact(BitSeq::from_string(line), hankel_n);
                out << h << "\n";
            } else {
                if (hankel_nmax == 0) throw std::invalid_argument("--nmax is required for pm-profile");
                const HankelProfile prof =
                    pm_profile(SignSeq::from_string(line), hankel_nmax,
                               hankel_oracle ? ProfileMode::exact_oracle : ProfileMode::gf2_fast);
                out << prof.to_string() << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(jfrac)) {
            const std::string line = detail::read_sequence_line(in);
            if (jfrac_rational) {
                const std::vector<Int> a = detail::parse_int_sequence(line);
                const RationalJFrac rf = jfrac_expand_rational(a, jfrac_depth);
                if (json_mode) {
                    json j;
                    for (const Rat& x : rf.v) j["v"].push_back(detail::rat_string(x));
                    for (const Rat& x : rf.u) j["u"].push_back(detail::rat_string(x));
                    out << j.dump() << "\n";
                } else {
                    out << "v:";
                    for (const Rat& x : rf.v) out << ' ' << detail::rat_string(x);
                    out << "\nu:";
                    for (const Rat& x : rf.u) out << ' ' << detail::rat_string(x);
                    out << "\n";
                }
            } else {
                const BitSeq c = BitSeq::from_string(line);
                const JFracGF2 jf = jfrac_expand_gf2(c, jfrac_depth);
                out << jf.to_string() << "\n";
                if (jfrac_approximant > 0) {
                    const std::size_t terms =
                        jfrac_terms ? jfrac_terms : 2 * jfrac_approximant + 2;
                    out << jfrac_approximant_gf2(jf, jfrac_approximant, terms).to_string() << "\n";
                }
            }
            return 0;
        }

        if (app.got_subcommand(classify_cmd)) {
            const ClassificationReport rep = classify(classify_p, classify_enum);
            if (json_mode) {
                json j{{"p", rep.p},
                       {"mu", rep.mu},
                       {"k", rep.k},
                       {"has_odd_cycle", rep.has_odd_cycle},
                       {"n_p", detail::int_to_json(rep.n_p)}};
                json cycles = json::array();
                for (const auto& c : rep.cycles.cycles) cycles.push_back(c);
                j["cycles"] = cycles;
                out << j.dump() << "\n";
                if (rep.vectors) {
                    for (const auto& v : *rep.vectors) {
                        json rec{{"p", rep.p}, {"alphabet", "pm"}, {"v", v}};
                        out << rec.dump() << "\n";
                    }
                }
            } else {
                out << "p             " << rep.p << "\n";
                out << "mu            " << rep.mu << "\n";
                out << "k             " << rep.k << "\n";
                out << "has_odd_cycle " << (rep.has_odd_cycle ? "true" : "false") << "\n";
                out << "n_p           " << rep.n_p << "\n";
                out << "cycles        " << rep.cycles.to_string() << "\n";
                if (rep.vectors)
                    for (const auto& v : *rep.vectors) out << pm_vector_string(v) << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(count)) {
            if (count_pmax < 2) throw std::invalid_argument("--pmax must be >= 2");
            if (json_mode) {
                for (std::uint64_t p = 2; p <= count_pmax; ++p) {
                    const Int np = count_apwenian(p);
                    json j{{"p", p}, {"n_p", detail::int_to_json(np)}};
                    if (p % 2 == 1) j["n_prime_p"] = detail::int_to_json(np / 2);
                    out << j.dump() << "\n";
                }
            } else {
                out << "p     N_p       N'_p\n";
                for (std::uint64_t p = 2; p <= count_pmax; ++p) {
                    const Int np = count_apwenian(p);
                    out << detail::pad(std::to_string(p), 6) << detail::pad(np.str(), 10);
                    if (p % 2 == 1)
                        out << (np / 2) << "\n";
                    else
                        out << "-\n";
                }
            }
            return 0;
        }

        if (app.got_subcommand(scan)) {
            unsigned threads = scan_threads;
            if (threads == 0) {
                if (const char* env = std::getenv("APW_THREADS"))
                    threads = static_cast<unsigned>(std::stoul(env));
                else
                    threads = 1;
            }
            const ScanFamily fam = detail::family_from_string(scan_family_str);
            const auto survivors = scan_family(fam, scan_p, scan_depth, threads);
            for (const ScanSurvivor& s : survivors) {
                if (json_mode) {
                    json j{{"family", scan_family_name(fam)},
                           {"p", scan_p},
                           {"alphabet", s.sub.alphabet == Alphabet::zero_one ? "01" : "pm"},
                           {"image1", s.sub.image_one_string()},
                           {"image0", s.sub.image_zero_string()},
                           {"hash", detail::hash_hex(s.prefix_hash)}};
                    out << j.dump() << "\n";
                } else {
                    out << s.sub.image_one_string() << ' ' << s.sub.image_zero_string() << ' '
                        << detail::hash_hex(s.prefix_hash) << "\n";
                }
            }
            if (!json_mode) out << "survivors: " << survivors.size() << "\n";
            return 0;
        }

        if (app.got_subcommand(pade_cmd)) {
            const std::vector<Int> a = detail::parse_int_sequence(detail::read_sequence_line(in));
            IntSeries f;
            f.coeffs = a;
            const PadeApprox pa = pade(f, pade_n);
            if (json_mode) {
                json j;
                for (const Rat& x : pa.P) j["P"].push_back(detail::rat_string(x));
                for (const Rat& x : pa.Q) j["Q"].push_back(detail::rat_string(x));
                out << j.dump() << "\n";
            } else {
                out << "P:";
                for (const Rat& x : pa.P) out << ' ' << detail::rat_string(x);
                out << "\nQ:";
                for (const Rat& x : pa.Q) out << ' ' << detail::rat_string(x);
                out << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(approx_cmd)) {
            const std::vector<int> v = parse_pm_vector(approx_v);
            const auto records = rational_approximations(approx_p, v, approx_b, approx_nmax);
            for (const RationalApproxRecord& rec : records) {
                if (json_mode) {
                    json j{{"n", rec.order},
                           {"r", detail::int_to_json(rec.r)},
                           {"s", detail::int_to_json(rec.s)},
                           {"err_log", rec.err_log},
                           {"exponent_estimate", rec.exponent_estimate}};
                    out << j.dump() << "\n";
                } else {
                    out << rec.order << '\t' << rec.r << '\t' << rec.s << '\t'
                        << detail::format_double(rec.err_log) << '\t'
                        << detail::format_double(rec.exponent_estimate) << "\n";
                }
            }
            return 0;
        }

        err_stream << "error: no subcommand selected\n" << app.help();
        return 2;
    } catch (const std::invalid_argument& e) {
        err_stream << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        err_stream << "internal invariant breach: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err_stream << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace apw::cli
