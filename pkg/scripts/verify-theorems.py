#!/usr/bin/env python3
"""
Verification script for oriented Steiner quasigroups
Runs every exhaustive sweep and writes a JSON report
"""

import json
import os
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))


def main():
    """Main function"""
    import argparse

    parser = argparse.ArgumentParser(description="Oriented Steiner quasigroup verification")
    parser.add_argument("--seed", type=int, default=0, help="Seed for sampled orientations and messages")
    parser.add_argument("--sample", type=int, help="Sample this many orientations instead of sweeping all")
    parser.add_argument("--output", default="verification_report.json", help="Output file for results")
    parser.add_argument("--env-file", help="Environment file to load")

    args = parser.parse_args()

    # Load environment file if specified
    if args.env_file and os.path.exists(args.env_file):
        from dotenv import load_dotenv

        load_dotenv(args.env_file)

    # settings are read when the package is first imported
    from oriented_steiner.verification import TheoremVerifier

    verifier = TheoremVerifier({"seed": args.seed, "sample": args.sample})
    results = verifier.run_comprehensive_verification()

    try:
        with open(args.output, "w") as f:
            json.dump(results, f, indent=2, default=str)
        print(f"\n📄 Results saved to: {args.output}")
    except OSError as e:
        print(f"\n⚠️  Could not save results: {e}")

    sys.exit(0 if results["summary"]["all_verified"] else 1)


if __name__ == "__main__":
    main()
