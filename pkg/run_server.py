#!/usr/bin/env python3
import argparse
import logging

import uvicorn

logger = logging.getLogger("completion-calculus")


def main() -> None:
    parser = argparse.ArgumentParser(description="Serve the operator matrix completion API")
    parser.add_argument("--host", default="0.0.0.0")
    parser.add_argument("--port", type=int, default=8000)
    parser.add_argument("--no-reload", action="store_true")
    args = parser.parse_args()

    logging.basicConfig(level=logging.INFO)
    logger.info("Completion API at http://%s:%d (docs under /docs)", args.host, args.port)
    uvicorn.run(
        "backend.app:app",
        host=args.host,
        port=args.port,
        reload=not args.no_reload,
        log_level="info",
    )


if __name__ == "__main__":
    main()
