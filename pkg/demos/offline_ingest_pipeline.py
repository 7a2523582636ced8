#!/usr/bin/env python3
"""Offline ingest pipeline: bundled fixture -> validated records -> cache ->
field descriptors -> an hR-growth run over the ingested family.

No network is touched anywhere: the default client configuration reads the
bundled fixture, and the second fetch below is served from the on-disk cache
even though its base URL points at a dead file path.
"""

import tempfile

from nfzeta import (
    ClientConfig,
    FamilySpec,
    IngestedFamily,
    QuerySpec,
    fetch,
    field_id,
    run_brauer_siegel,
    to_descriptor,
)


def main() -> None:
    with tempfile.TemporaryDirectory() as tmp:
        config = ClientConfig(cache_dir=tmp)
        query = QuerySpec(degree=2, abs_disc_max=50)

        result = fetch(query, config)
        print(
            f"fetched {len(result.records)} degree-2 records with |D| <= 50 "
            f"(source={result.source}, dropped={result.dropped}, truncated={result.truncated})"
        )
        for rec in result.records:
            print(f"  {rec.label}: D={rec.discriminant}, h={rec.h}, w={rec.torsion_w}")

        # Same query, dead remote, warm cache: the client falls back silently.
        dead = ClientConfig(base_url="file:///nowhere/db.json", cache_dir=tmp, offline=False)
        again = fetch(query, dead)
        print(f"re-fetch with unreachable source: served from {again.source}, "
              f"{'identical' if again.records == result.records else 'DIFFERENT'} records")
        print()

        descriptors = [to_descriptor(rec) for rec in result.records]
        print("descriptors:", ", ".join(field_id(F) for F in descriptors))

        table = run_brauer_siegel(FamilySpec(IngestedFamily(tuple(descriptors)), len(descriptors)))
        print()
        print("hR-growth statistics over the ingested family:")
        for row in table.rows:
            if row.measured is not None and "stat=hr" in row.flags:
                print(f"  {row.field_id:<16} g={row.genus:.4f}  log(hR)/g={row.measured:+.4f}")
        print()
        print(f"metadata: {table.metadata}")


if __name__ == "__main__":
    main()
