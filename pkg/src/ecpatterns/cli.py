"""Command line: ``ecpatterns {verify,search,check-hypothesis,enumerate,fetch-lmfdb}``.

All output is line-oriented JSON with rationals as strings.  Exit codes:
0 success, 1 verification failure, 2 bad input, 3 network or LMFDB error.
"""

from __future__ import annotations

import argparse
import contextlib
import sys

from .certificate import certificate_values, load_certificate, load_fixture, verify_certificate
from .curve import Curve
from .errors import (NetworkError, ParseError, PatternError, SchemaMismatch, UnknownLabel,
                     VerificationFailed)
from .hypothesis import check_pattern_hypothesis, lattes_duplication
from .lmfdb import fetch_curve
from .maps import CoordinateMap
from .membership import naive_point_search
from .patterns import (best_additive_shift, best_multiplicative_shift, intersection_report, longest_ap,
                       longest_gp, longest_orbit, scaling_intersection, scaling_report, shift_intersection,
                       shift_report)
from .serialize import (coordmap_from_json, curve_from_json, dumps, gamma_from_json, hypothesis_to_json,
                        load_json_file, map_from_json, point_from_json, point_to_json, rat_from_json,
                        report_to_json, values_to_json)
from .subgroup import ValueSet, enumerate_gamma, image_set, intersect_images

EXIT_OK, EXIT_FAILED, EXIT_PARSE, EXIT_NETWORK = 0, 1, 2, 3


@contextlib.contextmanager
def _output(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def _emit(out, obj):
    out.write(dumps(obj) + "\n")


def _load_curve(args) -> tuple:
    """(curve, raw JSON of the curve file or certificate, certificate or None)."""
    if getattr(args, "fixture", None):
        cert = load_fixture(args.fixture)
        if "curve" not in cert:
            return curve_from_json(cert), cert, None
        return curve_from_json(cert["curve"]), cert, cert
    if getattr(args, "curve", None):
        raw = load_json_file(args.curve)
        if "curve" in raw:
            return curve_from_json(raw["curve"]), raw, raw
        return curve_from_json(raw), raw, None
    raise ParseError("give --curve FILE or --fixture NAME")


def _coordmap(path, cert=None) -> CoordinateMap:
    if path:
        return coordmap_from_json(load_json_file(path))
    if cert is not None and "map" in cert:
        return coordmap_from_json(cert["map"])
    return CoordinateMap.x()


def _points(E: Curve, args, gamma_path):
    """Point set from --gamma/--bound or --naive; None when neither is given."""
    if gamma_path:
        spec = gamma_from_json(load_json_file(gamma_path))
        return enumerate_gamma(E, spec, args.bound), spec
    if args.naive:
        num, den = args.naive
        return naive_point_search(E, num, den), None
    return None, None


def _value_set(E, g, args, cert, gamma_path=None):
    points, spec = _points(E, args, gamma_path)
    if points is not None:
        return image_set(E, g, points, keep_infinity=args.allow_infinity), spec
    if cert is not None:
        return ValueSet.of(certificate_values(cert), "certificate values"), None
    raise ParseError("no value source: give --gamma FILE, --naive NUM DEN, or a certificate fixture")


def _rank(args, spec, raw):
    if args.rank is not None:
        return args.rank, False
    if spec is not None:
        return spec.rank, spec.rank_is_proxy
    if raw is not None and isinstance(raw.get("rank"), int):
        return raw["rank"], False
    return None, False


def cmd_verify(args, out) -> int:
    cert = load_certificate(args.certificate)
    name = cert.get("name", args.certificate)
    try:
        records = verify_certificate(cert)
    except VerificationFailed as exc:
        for rec in getattr(exc, "records", []):
            _emit(out, rec)
        _emit(out, {"certificate": name, "result": "FAIL", "detail": str(exc)})
        return EXIT_FAILED
    for rec in records:
        _emit(out, rec)
    _emit(out, {"certificate": name, "result": "PASS", "checks": len(records)})
    return EXIT_OK


def cmd_search(args, out) -> int:
    E, raw, cert = _load_curve(args)
    g = _coordmap(args.coord, cert)
    X, spec = _value_set(E, g, args, cert, args.gamma)
    rank, proxy = _rank(args, spec, raw)
    kind = args.kind
    if kind in ("ap", "gp", "shift", "scale"):
        X = X.finite()
    if kind == "ap":
        report = longest_ap(X)
    elif kind == "gp":
        report = longest_gp(X)
    elif kind == "orbit":
        if args.map:
            F = map_from_json(load_json_file(args.map))
        elif cert is not None and "orbit" in cert:
            F = map_from_json(cert["orbit"]["map"])
        else:
            raise ParseError("orbit search needs --map FILE")
        report = longest_orbit(X, F)
    elif kind == "shift":
        if args.a is not None:
            a = rat_from_json(args.a)
            S = shift_intersection(X, a)
        else:
            a, S = best_additive_shift(X)
        report = shift_report(S, a)
    elif kind == "scale":
        if args.q is not None:
            q = rat_from_json(args.q)
            S = scaling_intersection(X, q, args.exclude_fixed)
        else:
            q, S = best_multiplicative_shift(X, args.exclude_fixed)
        report = scaling_report(S, q)
    else:
        E2 = curve_from_json(load_json_file(args.curve2)) if args.curve2 else E
        g2 = _coordmap(args.coord2)
        pts1, _ = _points(E, args, args.gamma)
        pts2, _ = _points(E2, args, args.gamma2 or args.gamma)
        if pts1 is None and cert is not None and "points" in cert:
            pts1 = [point_from_json(P) for P in cert["points"]]
            pts2 = pts1 if E2 == E else pts2
        if pts1 is None or pts2 is None:
            raise ParseError("intersect needs point sets: --gamma/--gamma2 with --bound, or --naive")
        report = intersection_report(intersect_images(E, g, pts1, E2, g2, pts2, args.allow_infinity))
    if report.length >= 1:
        report = report.with_rank(rank)
    line = report_to_json(report)
    if rank is not None:
        line["rank"] = rank
        if proxy:
            line["rank_note"] = "no declared rank; generator count used instead"
    _emit(out, line)
    return EXIT_OK


def cmd_check_hypothesis(args, out) -> int:
    E, _, cert = _load_curve(args)
    g = _coordmap(args.coord, cert)
    if args.lattes:
        F = lattes_duplication(E)
    elif args.map:
        F = map_from_json(load_json_file(args.map))
    else:
        raise ParseError("give --map FILE or --lattes")
    _emit(out, hypothesis_to_json(check_pattern_hypothesis(E, g, F)))
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    E, _, cert = _load_curve(args)
    g = _coordmap(args.coord, cert)
    points, _ = _points(E, args, args.gamma)
    if points is None:
        raise ParseError("enumerate needs --gamma FILE or --naive NUM DEN")
    _emit(out, {"points": [point_to_json(P) for P in points]})
    _emit(out, {"values": values_to_json(image_set(E, g, points, keep_infinity=args.allow_infinity))})
    return EXIT_OK


def cmd_fetch_lmfdb(args, out) -> int:
    _emit(out, fetch_curve(args.label))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ecpatterns", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, values=True):
        p.add_argument("--curve", metavar="FILE", help="curve JSON file (or a certificate)")
        p.add_argument("--fixture", metavar="NAME", help="bundled fixture instead of --curve")
        p.add_argument("--coord", metavar="FILE", help="coordinate map g (default: x)")
        p.add_argument("--output", metavar="FILE")
        if values:
            p.add_argument("--gamma", metavar="FILE", help="generators of the subgroup")
            p.add_argument("--bound", type=int, default=1, metavar="N", help="coefficient bound for --gamma")
            p.add_argument("--naive", nargs=2, type=int, metavar=("NUM", "DEN"),
                           help="naive point search box instead of generators")
            p.add_argument("--allow-infinity", action="store_true", help="keep infinity in value sets")

    p = sub.add_parser("verify", help="check every claim of a certificate or bundled fixture")
    p.add_argument("certificate", help="fixture name or certificate JSON file")
    p.add_argument("--output", metavar="FILE")

    p = sub.add_parser("search", help="search a value set for a pattern")
    p.add_argument("kind", choices=["ap", "gp", "orbit", "shift", "scale", "intersect"])
    common(p)
    p.add_argument("--rank", type=int, metavar="R")
    p.add_argument("--a", metavar="RAT", help="additive shift")
    p.add_argument("--q", metavar="RAT", help="multiplicative shift")
    p.add_argument("--exclude-fixed", action="store_true", help="drop 0 from scaling sets")
    p.add_argument("--map", metavar="FILE", help="map F for orbit search")
    p.add_argument("--curve2", metavar="FILE", help="second curve for intersect (default: same)")
    p.add_argument("--coord2", metavar="FILE", help="second coordinate map for intersect")
    p.add_argument("--gamma2", metavar="FILE", help="generators on the second curve")

    p = sub.add_parser("check-hypothesis", help="compare branch values of g and F o g")
    common(p, values=False)
    p.add_argument("--map", metavar="FILE", help="map F")
    p.add_argument("--lattes", action="store_true", help="use the duplication map of the curve as F")

    p = sub.add_parser("enumerate", help="list subgroup points and their image values")
    common(p)

    p = sub.add_parser("fetch-lmfdb", help="download a curve file from LMFDB")
    p.add_argument("label")
    p.add_argument("--output", metavar="FILE")
    return parser


COMMANDS = {
    "verify": cmd_verify,
    "search": cmd_search,
    "check-hypothesis": cmd_check_hypothesis,
    "enumerate": cmd_enumerate,
    "fetch-lmfdb": cmd_fetch_lmfdb,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with _output(args.output) as out:
            return COMMANDS[args.command](args, out)
    except (NetworkError, UnknownLabel, SchemaMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NETWORK
    except VerificationFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except (ParseError, PatternError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
