import argparse
import asyncio
import logging
import sys
from typing import List, Optional

from app.claim_service import claim_service
from app.reporting import emit_report
from config.settings import Settings
from db.pool.store import manifest_store
from db.queries.claims import ClaimQueries
from models.claims import FieldConfig
from models.common import WorkbenchInfo

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dualkey", description=Settings.APP_DESCRIPTION)
    parser.add_argument("--run", default="all", help="Comma-separated claim ids, or 'all'")
    parser.add_argument("--list", action="store_true", help="List the claims of the manifest and exit")
    parser.add_argument("--char", choices=["p", "Q"], default=Settings.CHARACTERISTIC, help="Coefficient field")
    parser.add_argument("--prime", type=int, default=Settings.PRIME, help="Prime used with --char p")
    parser.add_argument("--seed", type=int, default=Settings.SEED, help="Global seed")
    parser.add_argument("--samples", type=int, default=Settings.SAMPLES, help="Default sample count for probes")
    parser.add_argument("--format", choices=["text", "json"], default=Settings.FORMAT, help="Report format")
    parser.add_argument("--out", default="-", help="Report path, '-' for standard output")
    parser.add_argument("--strict-limits", action="store_true", help="Exit with 3 when a claim hits a resource limit")
    parser.add_argument("--manifest", default=Settings.MANIFEST, help="Built-in manifest name or path to a json manifest")
    parser.add_argument("--parallelism", type=int, default=Settings.PARALLELISM, help="Claims run concurrently")
    parser.add_argument("--log-level", default=Settings.LOG_LEVEL, help="Logging level")
    return parser


def info() -> WorkbenchInfo:
    return WorkbenchInfo(
        name=Settings.APP_NAME,
        version=Settings.APP_VERSION,
        description=Settings.APP_DESCRIPTION,
        field=Settings.CHARACTERISTIC if Settings.CHARACTERISTIC == "Q" else f"F_{Settings.PRIME}",
        caps=Settings.default_caps(),
    )


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    logging.basicConfig(
        level=getattr(logging, str(args.log_level).upper(), logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    if args.samples < 1 or args.parallelism < 1 or args.seed < 0:
        print("--samples and --parallelism must be positive, --seed non-negative", file=sys.stderr)
        return EXIT_USAGE

    try:
        manifest = manifest_store.load(args.manifest)
    except (FileNotFoundError, ValueError) as e:
        print(f"Cannot load manifest {args.manifest}: {str(e)}", file=sys.stderr)
        return EXIT_USAGE

    if args.list:
        for row in ClaimQueries.listing(manifest):
            print(f"{row['id']:<6} {row['op']:<34} {row['anchor']}")
        return EXIT_OK

    if args.run != "all":
        ids = [i.strip() for i in args.run.split(",") if i.strip()]
        try:
            manifest = manifest.select(ids)
        except ValueError as e:
            print(str(e), file=sys.stderr)
            return EXIT_USAGE

    try:
        field = FieldConfig(characteristic=args.char, prime=args.prime)
    except ValueError as e:
        print(f"Invalid field: {str(e)}", file=sys.stderr)
        return EXIT_USAGE
    manifest = manifest.model_copy(update={"seed": args.seed, "field": field})
    workbench = info()
    logger.info(f"{workbench.name} {workbench.version}: {len(manifest.claims)} claims over {args.char}")

    reports = asyncio.run(claim_service.run_manifest(manifest, args.parallelism, args.samples))
    try:
        emit_report(reports, args.format, args.out)
    except OSError as e:
        print(f"Failed to write report: {str(e)}", file=sys.stderr)
        return EXIT_FAIL

    statuses = {report.status for report in reports}
    if "fail" in statuses:
        return EXIT_FAIL
    if args.strict_limits and "limit" in statuses:
        return EXIT_LIMIT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
