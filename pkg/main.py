import sys

from dotenv import load_dotenv

load_dotenv(override=True)

from app.api.cli import cli_dispatch  # noqa: E402


if __name__ == "__main__":
    sys.exit(cli_dispatch(sys.argv[1:]))
