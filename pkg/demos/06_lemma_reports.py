"""Run every registered verification lemma and print its report.

Each lemma bundles one guarantee of the pipeline with the checks that
establish it at desk scale.  The registry is what the `mmmkit verify-lemma`
subcommand and the experiment runner draw from; this walks all of it.
"""

from mmmkit import lemma_ids, verify_lemma


def main() -> None:
    failures = 0
    for lemma in lemma_ids():
        report = verify_lemma(lemma)
        print(report.render_text())
        failures += 0 if report.ok else 1
    total = len(lemma_ids())
    print(f"\n{total - failures}/{total} lemmas ok")
    if failures:
        raise SystemExit(1)


if __name__ == "__main__":
    main()
