from bicayley.cli import main

raise SystemExit(main())
