from copoly.cli import main

raise SystemExit(main())
