import argparse
import time

from app.core.models import ColoredGraph
from app.services.catalog import random_colored_graph
from app.services.genus import regular_genus


def main():
    ap = argparse.ArgumentParser(description="GenusReport timing on a seeded random 5-colored graph")
    ap.add_argument("--vertices", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    graph = random_colored_graph(4, args.vertices, args.seed)
    times = []
    for _ in range(args.repeat):
        # residue 캐시가 빈 새 객체
        fresh = ColoredGraph(dim=graph.dim, num_vertices=graph.num_vertices, matchings=graph.matchings)
        t0 = time.perf_counter()
        report = regular_genus(fresh, jobs=args.jobs)
        times.append(time.perf_counter() - t0)

    print(f"vertices={args.vertices} seed={args.seed} 2rho={report.regular_genus_times_two} "
          f"argmin={report.argmin.label}")
    print(f"best {min(times):.3f}s / worst {max(times):.3f}s over {args.repeat} runs")


if __name__ == "__main__":
    main()
